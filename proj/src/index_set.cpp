#include "wittforge/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wittforge/errors.hpp"

namespace wittforge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

IndexSet IndexSet::divisors_of(Index n) {
  if (n == 0) throw ValidationError("divisors_of needs n >= 1");
  std::vector<Index> out;
  for (Index d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return IndexSet(std::move(out));
}

IndexSet IndexSet::p_typical(Index p, unsigned length) {
  if (!is_prime(p)) throw ValidationError("p_typical needs a prime, got " + std::to_string(p));
  if (length == 0) throw ValidationError("p_typical needs length >= 1");
  std::vector<Index> out;
  Index q = 1;
  for (unsigned i = 0; i < length; ++i) {
    out.push_back(q);
    q *= p;
  }
  return IndexSet(std::move(out));
}

IndexSet IndexSet::from_list(std::vector<Index> elements) {
  if (elements.empty()) throw ValidationError("index set must be nonempty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.front() == 0) throw ValidationError("index set members must be positive");
  auto has = [&](Index n) { return std::binary_search(elements.begin(), elements.end(), n); };
  if (!has(1)) throw ValidationError("index set must contain 1");
  for (Index n : elements) {
    for (Index d = 1; d <= n; ++d) {
      if (n % d == 0 && !has(d)) {
        throw ValidationError("index set is not divisor-closed: " + std::to_string(d) + " divides " +
                              std::to_string(n));
      }
    }
  }
  for (Index a : elements) {
    for (Index b : elements) {
      if (a < b && std::gcd(a, b) == 1 && !has(a * b)) {
        throw ValidationError("index set is not closed under coprime products: missing " + std::to_string(a * b) +
                              " = " + std::to_string(a) + "*" + std::to_string(b));
      }
    }
  }
  return IndexSet(std::move(elements));
}

IndexSet IndexSet::parse(std::string_view text) {
  auto number = [&](std::string_view s) -> Index {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("bad number '" + std::string(s) + "' in index set '" + std::string(text) + "'");
    }
    return std::stoull(std::string(s));
  };
  if (text.starts_with("div:")) return divisors_of(number(text.substr(4)));
  if (text.starts_with("ptyp:")) {
    auto rest = text.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected ptyp:p:len, got '" + std::string(text) + "'");
    return p_typical(number(rest.substr(0, colon)), static_cast<unsigned>(number(rest.substr(colon + 1))));
  }
  if (text.starts_with("set:")) {
    std::vector<Index> out;
    std::string_view rest = text.substr(4);
    while (true) {
      auto comma = rest.find(',');
      out.push_back(number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return from_list(std::move(out));
  }
  throw ParseError("unknown index set form '" + std::string(text) + "'");
}

bool IndexSet::contains(Index n) const { return std::binary_search(elems_.begin(), elems_.end(), n); }

std::optional<std::size_t> IndexSet::position(Index n) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), n);
  if (it == elems_.end() || *it != n) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

IndexSet IndexSet::quotient_by(Index n) const {
  if (!contains(n)) throw ValidationError(std::to_string(n) + " is not in the index set {" + key() + "}");
  std::vector<Index> out;
  for (Index m : elems_)
    if (m % n == 0) out.push_back(m / n);
  return IndexSet(std::move(out));
}

IndexSet IndexSet::coprime_to(Index p) const {
  std::vector<Index> out;
  for (Index m : elems_)
    if (std::gcd(m, p) == 1) out.push_back(m);
  return IndexSet(std::move(out));
}

IndexSet IndexSet::powers_of(Index p) const {
  std::vector<Index> out;
  for (Index q = 1; contains(q); q *= p) {
    out.push_back(q);
    if (p == 1) break;
  }
  return IndexSet(std::move(out));
}

std::vector<IndexSet::Index> IndexSet::primes() const {
  std::vector<Index> out;
  for (Index m : elems_)
    if (is_prime(m)) out.push_back(m);
  return out;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::all_of(elems_.begin(), elems_.end(), [&](Index n) { return other.contains(n); });
}

std::string IndexSet::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << elems_[i];
  return os.str();
}

}  // namespace wittforge
