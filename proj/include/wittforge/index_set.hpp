#pragma once

// Finite index sets E for truncated big Witt vectors: contain 1, closed under
// divisors and under products of coprime members.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wittforge {

class IndexSet {
 public:
  using Index = std::uint64_t;

  IndexSet() : IndexSet(std::vector<Index>{1}) {}
  static IndexSet divisors_of(Index n);
  /// {1, p, ..., p^(length-1)}: `length` coordinates.
  static IndexSet p_typical(Index p, unsigned length);
  /// Validated explicit list.
  static IndexSet from_list(std::vector<Index> elements);
  /// `div:N | ptyp:p:len | set:a,b,c`.
  static IndexSet parse(std::string_view text);

  const std::vector<Index>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(Index n) const;
  std::optional<std::size_t> position(Index n) const;
  Index max() const { return elems_.back(); }

  /// E|n = {m : nm in E}.
  IndexSet quotient_by(Index n) const;
  /// E_(p): members coprime to p.
  IndexSet coprime_to(Index p) const;
  /// E^(p): powers of p in E.
  IndexSet powers_of(Index p) const;
  /// Primes that belong to E.
  std::vector<Index> primes() const;
  bool is_subset_of(const IndexSet& other) const;

  /// Comma-separated member list; used as a cache key and in JSON.
  std::string key() const;
  std::string descriptor() const { return "set:" + key(); }

  bool operator==(const IndexSet&) const = default;

 private:
  explicit IndexSet(std::vector<Index> sorted) : elems_(std::move(sorted)) {}
  std::vector<Index> elems_;
};

bool is_prime(std::uint64_t n);
/// p-adic valuation of n > 0.
unsigned valuation(std::uint64_t n, std::uint64_t p);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace wittforge
