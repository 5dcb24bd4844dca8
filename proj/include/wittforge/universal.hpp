#pragma once

// Universal Witt polynomials over Z, generated by inverting the ghost map
// with exact integer division, and cached per (E, operation).

#include <memory>
#include <string>
#include <vector>

#include "wittforge/index_set.hpp"
#include "wittforge/int_poly.hpp"

namespace wittforge {

enum class UniversalOp { sum, product, negation, frobenius };

std::string to_string(UniversalOp op);

struct UniversalFamily {
  IndexSet domain;
  UniversalOp op = UniversalOp::sum;
  IndexSet::Index k = 1;  // frobenius index
  IndexSet target;        // E, or E|k for frobenius
  /// Variables x_d (d in E, in order) then, for binary ops, y_d.
  std::size_t nvars = 0;
  std::vector<IntPoly> polys;  // aligned with target.elements()

  bool binary() const { return op == UniversalOp::sum || op == UniversalOp::product; }
  std::vector<std::string> var_names() const;
  const IntPoly& at(IndexSet::Index n) const;
};

/// Cache key, e.g. "E=1,2;op=frobenius:2".
std::string universal_key(const IndexSet& e, UniversalOp op, IndexSet::Index k = 1);

/// Ghost polynomial g_n in the x-variables (offset 0) or y-variables (offset |E|).
IntPoly ghost_polynomial(const IndexSet& e, IndexSet::Index n, std::size_t nvars, std::size_t offset);

/// Runs the recursion from scratch. Throws InexactDivision if integrality fails.
UniversalFamily generate_universal(const IndexSet& e, UniversalOp op, IndexSet::Index k = 1);

/// Cached access; thread safe, write-once per key. Consults WITTFORGE_CACHE_DIR when set.
std::shared_ptr<const UniversalFamily> universal_family(const IndexSet& e, UniversalOp op, IndexSet::Index k = 1);

void clear_universal_cache();
std::size_t universal_cache_size();

}  // namespace wittforge
