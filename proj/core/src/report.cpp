#include "fanohodge/report.hpp"

#include <algorithm>

namespace fanohodge {

std::string_view to_string(Status status) {
  return status == Status::verified ? "verified" : "failed";
}

Status VerificationReport::status() const {
  const bool effective = std::ranges::all_of(effectivity, &EffectivityCheck::effective);
  return lhs == rhs && effective ? Status::verified : Status::failed;
}

}  // namespace fanohodge
