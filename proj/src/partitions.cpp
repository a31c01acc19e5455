#include "schurpair/partitions.hpp"

#include <functional>

namespace schurpair {

std::vector<Partition> partitions_of(int n, int cap) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "partitions_of: negative n");
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded, "partitions_of(" + std::to_string(n) + ") exceeds cap " + std::to_string(cap));
  }
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> extend = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

}  // namespace schurpair
