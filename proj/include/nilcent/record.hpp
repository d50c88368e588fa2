#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcent/classical.hpp"
#include "nilcent/doublecent.hpp"

namespace nilcent {

enum class Route { Auto, Classical, Conjugacy, Doublecent };
std::string route_name(Route r);
/// Throws std::invalid_argument for unknown names.
Route parse_route(const std::string& s);

/// Natural representation behind a classical label: "B2" -> o(5), "C3" -> sp(6), "D4" -> o(8);
/// "o(7)", "so(7)" and "sp(6)" are accepted as well.
struct ClassicalSeries {
  FormKind kind = FormKind::Symmetric;
  size_t n = 0;
};
std::optional<ClassicalSeries> classical_series(const std::string& algebra);

/// "3,1,1", "[3,1,1]" and "3+1+1"; nullopt when s is not a partition.
std::optional<std::vector<size_t>> parse_partition(const std::string& s);
std::string partition_label(const std::vector<size_t>& parts);

/// Matrix triple file {"schema": "nilcent.triple/1", "form": "symmetric"|"alternating", "h", "e", "f"}.
struct TripleFile {
  FormKind kind = FormKind::Symmetric;
  MatrixTriple triple;
};
TripleFile load_triple_file(const std::string& path);

struct OrbitQuery {
  std::string algebra;
  /// Bala-Carter label (Chevalley models) or partition (classical labels); may be empty with a file.
  std::string orbit;
  /// Orbit JSON for Chevalley models, or a matrix triple file for the classical route.
  std::string representative_file;
  Route route = Route::Auto;
  /// Maximal number of (u, v, pi) triples for the double-centralizer route; 0 means no limit.
  size_t budget = 0;
};

struct OrbitRecord {
  std::string algebra, orbit, route;
  std::string representative;  // canonical JSON text of the representative
  std::string fixture_hash;
  IVec wdd;  // Chevalley models only
  bool structural = false;
  std::string c1_type, c2_type;  // "0" for a zero algebra
  CartanMatrix c1_cartan, c2_cartan;
  size_t d = 0;
  std::vector<WeightRow> weights;
  FiniteGroup group;               // Z_G(h,e,f) modulo its identity component
  std::vector<size_t> generators;  // indices into group.elements
  /// Classical route: the group of Z_Ghat(h,e,f), Ghat = O or Sp, on the natural representation.
  std::optional<FiniteGroup> hat_group;
  std::vector<size_t> hat_generators;
  std::string status = "OK";  // "OK" or "INCONCLUSIVE"
  std::vector<std::string> diagnostics;
  double seconds = 0;

  bool ok() const { return status == "OK"; }
};

/// Throws std::invalid_argument for unknown labels and inapplicable routes.
OrbitRecord compute_record(const OrbitQuery& q, const ConjugacyOptions& opt = {});

/// Identity first, table a Latin square, associative, consistent with element_orders and label.
bool verify_closure(const FiniteGroup& g);
/// Greedy generating set: the first element not in the subgroup generated so far, repeatedly.
std::vector<size_t> minimal_generators(const FiniteGroup& g);

std::string record_to_json(const OrbitRecord& r, bool timing = false);

/// One JSON file per (algebra, orbit, route, fixture hash).
class ResultStore {
 public:
  explicit ResultStore(std::string dir) : dir_(std::move(dir)) {}
  std::string path_for(const std::string& algebra, const std::string& orbit, const std::string& route,
                       const std::string& hash) const;
  /// Throws std::logic_error when the group fails verify_closure. Returns the file path.
  std::string save(const OrbitRecord& r) const;
  std::optional<std::string> load(const std::string& algebra, const std::string& orbit, const std::string& route,
                                  const std::string& hash) const;

 private:
  std::string dir_;
};

/// Orbit labels: shipped fixtures or enumeration for Chevalley types, partitions for classical labels.
std::vector<std::string> orbit_labels(const std::string& algebra);

/// Auto-route records of all orbits of `algebra` with a nontrivial component group.
std::vector<OrbitRecord> nontrivial_records(const std::string& algebra, const ConjugacyOptions& opt = {});
std::string render_table(const std::vector<OrbitRecord>& rows);
/// Differences between computed rows and a reference table; empty when they agree.
std::vector<std::string> diff_table(const std::vector<OrbitRecord>& rows, const std::vector<TableRow>& ref);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& s);

}  // namespace nilcent
