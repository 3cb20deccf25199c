#include "mstep/partition.hpp"

#include <algorithm>

#include "mstep/error.hpp"

namespace mstep {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InputError("partition parts must be nonincreasing");
    }
    total_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (unsigned p : parts_) {
    if (!out.empty()) out += '+';
    out += std::to_string(p);
  }
  return out;
}

Partitions::Partitions(unsigned total) : total_(total) {
  if (total == 0) throw InputError("partitions: total must be positive");
}

Partitions::iterator::iterator(unsigned total) : parts_{total}, done_(false) {}

Partitions::iterator& Partitions::iterator::operator++() {
  // Drop the trailing ones, decrement the last part above one, then refill
  // greedily with copies of the decremented part.
  unsigned freed = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    ++freed;
    parts_.pop_back();
  }
  if (parts_.empty()) {
    done_ = true;
    return *this;
  }
  const unsigned cap = --parts_.back();
  ++freed;
  while (freed > 0) {
    const unsigned part = std::min(cap, freed);
    parts_.push_back(part);
    freed -= part;
  }
  return *this;
}

}  // namespace mstep
