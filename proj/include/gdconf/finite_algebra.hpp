#pragma once

#include "gdconf/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdconf {

using Vec = std::vector<Rational>;

/// Structure constants of a bilinear product on a dim-dimensional space:
/// at(i, j, k) is the coefficient of b_k in b_i · b_j.
class StructureTable {
 public:
  StructureTable() = default;
  explicit StructureTable(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  // entries[i][j][k]; throws std::invalid_argument unless the array is dim×dim×dim.
  static StructureTable from_entries(const std::vector<std::vector<std::vector<Rational>>>& entries);

  std::size_t dim() const { return dim_; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim_ + j) * dim_ + k]; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }

  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec product(const Vec& a, const Vec& b) const;
  bool is_zero() const;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

Vec basis_vector(std::size_t dim, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);

// Outcome of an exhaustive identity check over basis tuples. Failures are
// data: the first failing tuple and its full defect vector are kept.
struct CheckReport {
  bool ok = true;
  std::string identity;               // name of the violated identity when !ok
  std::vector<std::size_t> witness;   // basis indices of the failing tuple
  Vec defect;                         // value of the identity on the witness
  std::size_t tuples_checked = 0;

  std::string describe(const std::vector<std::string>& basis_names = {}) const;
  nlohmann::json to_json(const std::vector<std::string>& basis_names = {}) const;
};

CheckReport check_novikov(const StructureTable& t);
CheckReport check_lie(const StructureTable& t);

class InvalidAlgebra : public std::runtime_error {
 public:
  InvalidAlgebra(const std::string& what, CheckReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// Gel'fand–Dorfman algebra: a Novikov product ∘ and a compatible Lie
/// bracket on the same space.
class GDAlgebra {
 public:
  // Validating constructor; throws InvalidAlgebra on the first failed check.
  GDAlgebra(std::vector<std::string> basis_names, StructureTable novikov, StructureTable lie);

  // Skips validation. Only for deliberately broken fixtures.
  static GDAlgebra unchecked(std::vector<std::string> basis_names, StructureTable novikov, StructureTable lie);

  std::size_t dim() const { return novikov_.dim(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureTable& novikov() const { return novikov_; }
  const StructureTable& lie() const { return lie_; }
  bool validated() const { return validated_; }

  Vec circ(const Vec& a, const Vec& b) const { return novikov_.product(a, b); }
  Vec bracket(const Vec& a, const Vec& b) const { return lie_.product(a, b); }

  // Index of a basis name; throws std::out_of_range when unknown.
  std::size_t index_of(const std::string& name) const;

 private:
  struct NoCheck {};
  GDAlgebra(std::vector<std::string> names, StructureTable novikov, StructureTable lie, NoCheck);

  std::vector<std::string> names_;
  StructureTable novikov_;
  StructureTable lie_;
  bool validated_ = false;
};

CheckReport check_gd_compat(const GDAlgebra& g);

// V^(−): the Novikov product together with its commutator bracket.
// Throws InvalidAlgebra if t is not Novikov.
GDAlgebra minus_construction(const StructureTable& t, std::vector<std::string> basis_names = {});

std::vector<std::string> default_basis_names(std::size_t dim);

// Built-in examples.
GDAlgebra virasoro_gd();                 // v ∘ v = v, [v, v] = 0
GDAlgebra abelian_gd();                  // v ∘ v = 0, [v, v] = 0
GDAlgebra current_gd(const StructureTable& lie, std::vector<std::string> basis_names);
StructureTable sl2_table();              // basis (e, f, h)
StructureTable solv2_table();            // [e1, e2] = e2

// JSON structure-constant format:
// {"dim": n, "basis": [...], "novikov": [[["p/q", ...]]], "lie": [[[...]]]}
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GDTables {
  std::vector<std::string> basis;
  StructureTable novikov;
  StructureTable lie;
};

GDTables gd_tables_from_json(const nlohmann::json& j);
// Reads and parses a GD file; unreadable files and bad JSON are ParseErrors.
GDTables load_gd_tables(const std::string& path);
nlohmann::json gd_to_json(const std::vector<std::string>& basis, const StructureTable& novikov, const StructureTable& lie);
nlohmann::json gd_to_json(const GDAlgebra& g);

}  // namespace gdconf
