#pragma once

#include <string>

#include "rigidbound/bigint.hpp"

namespace rigidbound {

enum class Provenance { Orientation, Permanent, Formula };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Orientation:
      return "orientation";
    case Provenance::Permanent:
      return "permanent";
    case Provenance::Formula:
      return "formula";
  }
  return "unknown";
}

/// A non-negative exact bound and the route that produced it.
struct BoundValue {
  BigInt value;
  Provenance provenance = Provenance::Formula;
};

}  // namespace rigidbound
