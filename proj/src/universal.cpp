#include "wittforge/universal.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "wittforge/errors.hpp"
#include "wittforge/json_io.hpp"

namespace wittforge {

std::string to_string(UniversalOp op) {
  switch (op) {
    case UniversalOp::sum: return "sum";
    case UniversalOp::product: return "product";
    case UniversalOp::negation: return "negation";
    case UniversalOp::frobenius: return "frobenius";
  }
  return "?";
}

std::vector<std::string> UniversalFamily::var_names() const {
  std::vector<std::string> names;
  for (auto d : domain.elements()) names.push_back("x" + std::to_string(d));
  if (binary())
    for (auto d : domain.elements()) names.push_back("y" + std::to_string(d));
  return names;
}

const IntPoly& UniversalFamily::at(IndexSet::Index n) const {
  auto pos = target.position(n);
  if (!pos) throw ValidationError("index " + std::to_string(n) + " not in target index set");
  return polys[*pos];
}

std::string universal_key(const IndexSet& e, UniversalOp op, IndexSet::Index k) {
  std::string key = "E=" + e.key() + ";op=" + to_string(op);
  if (op == UniversalOp::frobenius) key += ":" + std::to_string(k);
  return key;
}

IntPoly ghost_polynomial(const IndexSet& e, IndexSet::Index n, std::size_t nvars, std::size_t offset) {
  IntPoly g(nvars);
  for (auto d : e.elements()) {
    if (d > n) break;
    if (n % d) continue;
    g += IntPoly::variable(nvars, offset + *e.position(d)).pow(n / d).scaled(Integer(static_cast<unsigned long>(d)));
  }
  return g;
}

UniversalFamily generate_universal(const IndexSet& e, UniversalOp op, IndexSet::Index k) {
  UniversalFamily fam;
  fam.domain = e;
  fam.op = op;
  fam.k = op == UniversalOp::frobenius ? k : 1;
  fam.target = op == UniversalOp::frobenius ? e.quotient_by(k) : e;
  fam.nvars = fam.binary() ? 2 * e.size() : e.size();
  const std::size_t nv = fam.nvars;

  auto target_ghost = [&](IndexSet::Index n) {
    switch (op) {
      case UniversalOp::sum: return ghost_polynomial(e, n, nv, 0) + ghost_polynomial(e, n, nv, e.size());
      case UniversalOp::product: return ghost_polynomial(e, n, nv, 0) * ghost_polynomial(e, n, nv, e.size());
      case UniversalOp::negation: return -ghost_polynomial(e, n, nv, 0);
      case UniversalOp::frobenius: return ghost_polynomial(e, k * n, nv, 0);
    }
    return IntPoly(nv);
  };

  const auto& idx = fam.target.elements();
  fam.polys.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto n = idx[i];
    const IntPoly target = target_ghost(n);
    IntPoly rest(nv);
    for (std::size_t j = 0; j < i; ++j) {
      const auto d = idx[j];
      if (n % d) continue;
      rest += fam.polys[j].pow(n / d).scaled(Integer(static_cast<unsigned long>(d)));
    }
    IntPoly s;
    try {
      s = (target - rest).exact_div(Integer(static_cast<unsigned long>(n)));
    } catch (const InexactDivision& err) {
      throw InexactDivision("universal " + universal_key(e, op, k) + " at n=" + std::to_string(n) + ": " + err.what());
    }
    // Ghost compatibility: sum_{d|n} d s_d^{n/d} reproduces the target.
    if (s.scaled(Integer(static_cast<unsigned long>(n))) + rest != target) {
      throw Error("ghost compatibility check failed for " + universal_key(e, op, k));
    }
    fam.polys.push_back(std::move(s));
  }
  return fam;
}

namespace {

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const UniversalFamily>>& cache() {
  static std::map<std::string, std::shared_ptr<const UniversalFamily>> c;
  return c;
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::optional<std::filesystem::path> disk_path(const std::string& key) {
  const char* dir = std::getenv("WITTFORGE_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / ("universal-" + fnv1a_hex(key) + ".json");
}

std::shared_ptr<const UniversalFamily> load_disk(const std::string& key, const IndexSet& e, UniversalOp op,
                                                 IndexSet::Index k) {
  auto path = disk_path(key);
  if (!path || !std::filesystem::exists(*path)) return nullptr;
  try {
    std::ifstream in(*path);
    auto j = nlohmann::ordered_json::parse(in);
    if (j.at("key").get<std::string>() != key) return nullptr;
    auto fam = std::make_shared<UniversalFamily>(universal_from_json(j, e, op, k));
    return fam;
  } catch (const std::exception&) {
    return nullptr;  // unreadable cache entries are regenerated
  }
}

void store_disk(const std::string& key, const UniversalFamily& fam) {
  auto path = disk_path(key);
  if (!path) return;
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  auto tmp = *path;
  tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&fam));
  {
    std::ofstream out(tmp);
    if (!out) return;
    auto j = universal_to_json(fam);
    j["key"] = key;
    out << j.dump();
  }
  std::filesystem::rename(tmp, *path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::shared_ptr<const UniversalFamily> universal_family(const IndexSet& e, UniversalOp op, IndexSet::Index k) {
  if (op != UniversalOp::frobenius) k = 1;
  const std::string key = universal_key(e, op, k);
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  auto fam = load_disk(key, e, op, k);
  if (!fam) {
    fam = std::make_shared<const UniversalFamily>(generate_universal(e, op, k));
    store_disk(key, *fam);
  }
  std::lock_guard lock(cache_mutex);
  return cache().emplace(key, fam).first->second;
}

void clear_universal_cache() {
  std::lock_guard lock(cache_mutex);
  cache().clear();
}

std::size_t universal_cache_size() {
  std::lock_guard lock(cache_mutex);
  return cache().size();
}

}  // namespace wittforge
