#include "gdconf/finite_algebra.hpp"

#include <fstream>
#include <sstream>

namespace gdconf {

StructureTable StructureTable::from_entries(const std::vector<std::vector<std::vector<Rational>>>& entries) {
  const std::size_t n = entries.size();
  StructureTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw std::invalid_argument("structure table row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (entries[i][j].size() != n) throw std::invalid_argument("structure table entry has wrong length");
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = entries[i][j][k];
    }
  }
  return t;
}

Vec StructureTable::basis_product(std::size_t i, std::size_t j) const {
  Vec r(dim_);
  for (std::size_t k = 0; k < dim_; ++k) r[k] = at(i, j, k);
  return r;
}

Vec StructureTable::product(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Rational c = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) r[k] += c * at(i, j, k);
    }
  }
  return r;
}

bool StructureTable::is_zero() const {
  for (const auto& q : data_)
    if (q != 0) return false;
  return true;
}

Vec basis_vector(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

namespace {

std::string name_of(std::size_t i, const std::vector<std::string>& names) {
  return i < names.size() ? names[i] : "b" + std::to_string(i);
}

std::string vec_string(const Vec& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(v[k]) << ")*" << name_of(k, names);
  }
  return first ? "0" : os.str();
}

// Runs `defect` on every basis triple; stops at the first nonzero value.
template <typename F>
CheckReport sweep3(std::size_t n, const char* identity, F&& defect, CheckReport report = {}) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        ++report.tuples_checked;
        Vec d = defect(a, b, c);
        if (!is_zero(d)) {
          report.ok = false;
          report.identity = identity;
          report.witness = {a, b, c};
          report.defect = std::move(d);
          return report;
        }
      }
  return report;
}

}  // namespace

std::string CheckReport::describe(const std::vector<std::string>& names) const {
  if (ok) return "ok (" + std::to_string(tuples_checked) + " tuples)";
  std::ostringstream os;
  os << identity << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << name_of(witness[i], names);
  os << "): defect = " << vec_string(defect, names);
  return os.str();
}

nlohmann::json CheckReport::to_json(const std::vector<std::string>& names) const {
  nlohmann::json j;
  j["ok"] = ok;
  j["tuples_checked"] = tuples_checked;
  if (!ok) {
    j["identity"] = identity;
    auto& w = j["witness"] = nlohmann::json::array();
    for (auto i : witness) w.push_back(name_of(i, names));
    auto& d = j["defect"] = nlohmann::json::array();
    for (const auto& q : defect) d.push_back(to_string(q));
  }
  return j;
}

CheckReport check_novikov(const StructureTable& t) {
  const std::size_t n = t.dim();
  auto e = [n](std::size_t i) { return basis_vector(n, i); };
  // (a∘b)∘c − a∘(b∘c) − (b∘a)∘c + b∘(a∘c)
  CheckReport r = sweep3(n, "left-symmetry", [&](std::size_t a, std::size_t b, std::size_t c) {
    return t.product(t.basis_product(a, b), e(c)) - t.product(e(a), t.basis_product(b, c)) -
           t.product(t.basis_product(b, a), e(c)) + t.product(e(b), t.basis_product(a, c));
  });
  if (!r.ok) return r;
  // (a∘b)∘c − (a∘c)∘b
  return sweep3(
      n, "right-commutativity",
      [&](std::size_t a, std::size_t b, std::size_t c) {
        return t.product(t.basis_product(a, b), e(c)) - t.product(t.basis_product(a, c), e(b));
      },
      r);
}

CheckReport check_lie(const StructureTable& t) {
  const std::size_t n = t.dim();
  CheckReport r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      ++r.tuples_checked;
      Vec d = t.basis_product(a, b) + t.basis_product(b, a);
      if (!is_zero(d)) {
        r.ok = false;
        r.identity = "antisymmetry";
        r.witness = {a, b};
        r.defect = std::move(d);
        return r;
      }
    }
  auto e = [n](std::size_t i) { return basis_vector(n, i); };
  return sweep3(
      n, "jacobi",
      [&](std::size_t a, std::size_t b, std::size_t c) {
        return t.product(e(a), t.basis_product(b, c)) + t.product(e(b), t.basis_product(c, a)) +
               t.product(e(c), t.basis_product(a, b));
      },
      r);
}

CheckReport check_gd_compat(const GDAlgebra& g) {
  const std::size_t n = g.dim();
  auto e = [n](std::size_t i) { return basis_vector(n, i); };
  // [a, b∘c] − [c, b∘a] − b∘[a, c] + [b, a]∘c − [b, c]∘a
  return sweep3(n, "gd-compatibility", [&](std::size_t a, std::size_t b, std::size_t c) {
    const auto& nov = g.novikov();
    const auto& lie = g.lie();
    return lie.product(e(a), nov.basis_product(b, c)) - lie.product(e(c), nov.basis_product(b, a)) -
           nov.product(e(b), lie.basis_product(a, c)) + nov.product(lie.basis_product(b, a), e(c)) -
           nov.product(lie.basis_product(b, c), e(a));
  });
}

GDAlgebra::GDAlgebra(std::vector<std::string> names, StructureTable novikov, StructureTable lie, NoCheck)
    : names_(std::move(names)), novikov_(std::move(novikov)), lie_(std::move(lie)) {
  if (novikov_.dim() != lie_.dim()) throw std::invalid_argument("novikov and lie tables differ in dimension");
  if (names_.empty()) names_ = default_basis_names(novikov_.dim());
  if (names_.size() != novikov_.dim()) throw std::invalid_argument("basis name count does not match dimension");
}

GDAlgebra::GDAlgebra(std::vector<std::string> names, StructureTable novikov, StructureTable lie)
    : GDAlgebra(std::move(names), std::move(novikov), std::move(lie), NoCheck{}) {
  if (auto r = check_novikov(novikov_); !r.ok) throw InvalidAlgebra("not a Novikov algebra: " + r.describe(names_), r);
  if (auto r = check_lie(lie_); !r.ok) throw InvalidAlgebra("not a Lie algebra: " + r.describe(names_), r);
  if (auto r = check_gd_compat(*this); !r.ok)
    throw InvalidAlgebra("Gel'fand-Dorfman compatibility fails: " + r.describe(names_), r);
  validated_ = true;
}

GDAlgebra GDAlgebra::unchecked(std::vector<std::string> names, StructureTable novikov, StructureTable lie) {
  return GDAlgebra(std::move(names), std::move(novikov), std::move(lie), NoCheck{});
}

std::size_t GDAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::out_of_range("unknown basis element '" + name + "'");
}

std::vector<std::string> default_basis_names(std::size_t dim) {
  if (dim == 1) return {"v"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

GDAlgebra minus_construction(const StructureTable& t, std::vector<std::string> basis_names) {
  if (auto r = check_novikov(t); !r.ok) throw InvalidAlgebra("minus construction needs a Novikov table: " + r.describe(), r);
  const std::size_t n = t.dim();
  StructureTable lie(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) lie.at(i, j, k) = t.at(i, j, k) - t.at(j, i, k);
  return GDAlgebra(std::move(basis_names), t, std::move(lie));
}

GDAlgebra virasoro_gd() {
  StructureTable nov(1);
  nov.at(0, 0, 0) = 1;
  return GDAlgebra({"v"}, nov, StructureTable(1));
}

GDAlgebra abelian_gd() { return GDAlgebra({"v"}, StructureTable(1), StructureTable(1)); }

GDAlgebra current_gd(const StructureTable& lie, std::vector<std::string> basis_names) {
  return GDAlgebra(std::move(basis_names), StructureTable(lie.dim()), lie);
}

StructureTable sl2_table() {
  // e = 0, f = 1, h = 2
  StructureTable t(3);
  t.at(0, 1, 2) = 1;
  t.at(1, 0, 2) = -1;
  t.at(2, 0, 0) = 2;
  t.at(0, 2, 0) = -2;
  t.at(2, 1, 1) = -2;
  t.at(1, 2, 1) = 2;
  return t;
}

StructureTable solv2_table() {
  StructureTable t(2);
  t.at(0, 1, 1) = 1;
  t.at(1, 0, 1) = -1;
  return t;
}

namespace {

StructureTable table_from_json(const nlohmann::json& j, std::size_t dim, const char* key) {
  if (!j.is_array() || j.size() != dim) throw ParseError(std::string("'") + key + "' must be a dim×dim×dim array");
  std::vector<std::vector<std::vector<Rational>>> entries(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != dim) throw ParseError(std::string("'") + key + "' row has wrong length");
    entries[i].resize(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      const auto& cell = row[a];
      if (!cell.is_array() || cell.size() != dim) throw ParseError(std::string("'") + key + "' entry has wrong length");
      for (const auto& q : cell) {
        try {
          if (q.is_string())
            entries[i][a].push_back(parse_rational(q.get<std::string>()));
          else if (q.is_number_integer())
            entries[i][a].emplace_back(q.get<long>());
          else
            throw ParseError("rationals must be strings \"p/q\" or integers");
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
      }
    }
  }
  return StructureTable::from_entries(entries);
}

nlohmann::json table_to_json(const StructureTable& t) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      auto cell = nlohmann::json::array();
      for (std::size_t k = 0; k < t.dim(); ++k) cell.push_back(to_string(t.at(i, j, k)));
      row.push_back(std::move(cell));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

GDTables gd_tables_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("GD file must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw ParseError("'dim' must be a positive integer");
  const auto dim = j["dim"].get<std::size_t>();
  GDTables out;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != dim) throw ParseError("'basis' must list dim names");
    for (const auto& name : j["basis"]) {
      if (!name.is_string() || name.get<std::string>().empty()) throw ParseError("basis names must be strings");
      out.basis.push_back(name.get<std::string>());
    }
  } else {
    out.basis = default_basis_names(dim);
  }
  out.novikov = j.contains("novikov") ? table_from_json(j["novikov"], dim, "novikov") : StructureTable(dim);
  out.lie = j.contains("lie") ? table_from_json(j["lie"], dim, "lie") : StructureTable(dim);
  return out;
}

GDTables load_gd_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return gd_tables_from_json(j);
}

nlohmann::json gd_to_json(const std::vector<std::string>& basis, const StructureTable& novikov, const StructureTable& lie) {
  return {{"dim", novikov.dim()}, {"basis", basis}, {"novikov", table_to_json(novikov)}, {"lie", table_to_json(lie)}};
}

nlohmann::json gd_to_json(const GDAlgebra& g) { return gd_to_json(g.basis_names(), g.novikov(), g.lie()); }

}  // namespace gdconf
