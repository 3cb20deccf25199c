#pragma once

#include <cstddef>
#include <iterator>
#include <ranges>
#include <string>
#include <vector>

namespace mstep {

/// Nonincreasing sequence of positive parts.
class Partition {
 public:
  /// Throws InputError unless `parts` is nonempty, nonincreasing and positive.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned total() const { return total_; }
  std::size_t size() const { return parts_.size(); }

  std::string to_string() const;  // "2+1"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned total_ = 0;
};

/// All partitions of `total` in reverse-lexicographic order, starting at
/// [total] and ending at [1, ..., 1]. Iterating is allocation-free apart from
/// the copy made on dereference.
class Partitions : public std::ranges::view_interface<Partitions> {
 public:
  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;

    Partition operator*() const { return Partition(parts_); }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class Partitions;
    explicit iterator(unsigned total);

    std::vector<unsigned> parts_;
    bool done_ = true;
  };

  Partitions() = default;
  /// total >= 1; throws InputError otherwise.
  explicit Partitions(unsigned total);

  iterator begin() const { return iterator(total_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  unsigned total_ = 1;
};

}  // namespace mstep
