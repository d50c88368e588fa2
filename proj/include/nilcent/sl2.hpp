#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcent/liealg.hpp"

namespace nilcent {

struct Sl2Triple {
  QVec h, e, f;
  std::string label;
};

bool is_ad_nilpotent(const LieAlgebra& g, const QVec& x);
/// [h,e] = 2e, [h,f] = -2f, [e,f] = h, exactly.
bool is_sl2_triple(const LieAlgebra& g, const QVec& h, const QVec& e, const QVec& f);

/// Completes a nilpotent e to an sl2-triple. Throws std::invalid_argument
/// when e is not ad-nilpotent.
Sl2Triple jacobson_morozov(const LieAlgebra& g, const QVec& e);

/// Labels alpha_i(h') of the dominant Cartan conjugate h' of t.h (Chevalley models).
/// When h is not in the standard Cartan subalgebra, the ad h spectrum is matched
/// against the characteristic labelings; ties fall back to conjugation.
IVec weighted_dynkin_diagram(const LieAlgebra& model, const Sl2Triple& t);
/// Always conjugates h into the standard Cartan subalgebra first.
IVec weighted_dynkin_diagram_by_conjugation(const LieAlgebra& model, const Sl2Triple& t);
bool same_orbit(const LieAlgebra& model, const Sl2Triple& a, const Sl2Triple& b);

/// Cartan element with alpha_i(h) = labels[i].
QVec characteristic_element(const LieAlgebra& model, const IVec& labels);
/// Root indices r with <r, h> = k for the characteristic of `labels`.
std::vector<size_t> graded_roots(const LieAlgebra& model, const IVec& labels, long long k);
/// dim g - dim g_0 - dim g_1.
size_t orbit_dimension(const LieAlgebra& model, const IVec& labels);
/// Whether e in g_2 has the characteristic of `labels` as its neutral element.
bool has_characteristic(const LieAlgebra& model, const IVec& labels, const QVec& e);

/// Orbit representative as stored in fixtures: e = sum coeff * x_root over positive roots.
struct OrbitRepresentative {
  std::string algebra;
  std::string label;
  std::vector<std::pair<IVec, Rational>> terms;
  IVec wdd;  // optional, empty when unknown
  size_t dim = 0;

  QVec element(const LieAlgebra& model) const;
};

std::string orbit_to_json(const OrbitRepresentative& r, int indent = -1);
OrbitRepresentative orbit_from_json(const std::string& text);
std::vector<OrbitRepresentative> load_orbit_file(const std::string& path);
void save_orbit_file(const std::string& path, const std::vector<OrbitRepresentative>& reps);
/// Representatives shipped in the data directory, for `algebra` (e.g. "F4").
std::vector<OrbitRepresentative> builtin_orbits(const std::string& algebra);
std::optional<OrbitRepresentative> builtin_orbit(const std::string& algebra, const std::string& label);
std::string data_dir();

/// All nilpotent orbits of a simple Chevalley model, with sparse representatives
/// and Bala-Carter labels derived from a minimal Levi subalgebra.
std::vector<OrbitRepresentative> enumerate_orbits(const LieAlgebra& model, unsigned seed = 1);

/// Standard Cartan elements centralizing the triple.
Subspace standard_torus(const LieAlgebra& model, const Sl2Triple& t);
/// Whether standard_torus(t) is a maximal toral subalgebra of z(h,e,f).
bool standard_torus_is_maximal(const LieAlgebra& model, const Sl2Triple& t);

/// Type of the minimal Levi subalgebra containing e (with ~ on short-root
/// type A components), e.g. "A2+~A1".
std::string levi_label(const LieAlgebra& model, const Sl2Triple& t);

}  // namespace nilcent
