#pragma once

#include <optional>
#include <string>

#include "toricform/newton.hpp"
#include "toricform/pform.hpp"
#include "toricform/pullback.hpp"

namespace toricform {

enum class Verdict { nondegenerate, degenerate, unknown };

std::string verdict_name(Verdict v);

// Point of the torus where the system vanishes.  Exact witnesses carry
// rational coordinates verified by evaluation; numeric ones carry the
// residual of the damped Newton iteration that produced them.
struct Witness {
  bool exact = false;
  std::vector<Rat> point;
  std::vector<Cplx> approx;
  double residual = 0.0;
};

enum class Reason {
  empty_system,          // nothing to vanish: the whole torus qualifies
  constant_coefficient,  // a restricted coefficient is a nonzero constant
  monomial_coefficient,  // a restricted coefficient never vanishes on the torus
  univariate_gcd,        // one active variable, decided by the gcd
  single_polynomial,     // one stripped non-monomial always meets the torus
  elimination,           // two active variables, decided by resultants
  shared_factor,         // a pair with identically zero resultant shares a curve
  face_transport,        // inherited from the matching face certificate
  witness_transport,     // exact witness carried through the chart map
  numeric_witness,       // damped Newton located an approximate common zero
  exhausted,             // every strategy fell through
};

std::string reason_name(Reason r);

struct Decision {
  Verdict verdict = Verdict::unknown;
  Reason reason = Reason::exhausted;
  Witness witness;
  std::string detail;
};

struct NumericParams {
  int trials = 64;
  int steps = 50;
  double tol = 1e-10;
  double floor = 1e-10;
};

// Seeded multistart damped Newton search for a common zero with every
// active coordinate away from the axes; inactive coordinates sit at one.
std::optional<Witness> numeric_witness_search(const std::vector<Polynomial>& system,
                                              unsigned long seed,
                                              const NumericParams& prm = {});

// Does the system vanish somewhere on the torus (every coordinate nonzero)?
// Exact strategies run first; the numeric search only ever produces
// degeneracy evidence, never a nondegeneracy claim.
Decision decide_torus_emptiness(const std::vector<Polynomial>& system, unsigned long seed,
                                const NumericParams& prm = {});

struct FaceCheck {
  Face face;
  std::map<Subset, Polynomial> restricted;  // coefficients cut down to the face
  Decision decision;
};

struct NndReport {
  bool nondegenerate = false;  // no face was flagged
  std::vector<FaceCheck> faces;
};

// Check every face of the polyhedron of the form, the body included.
NndReport nnd_check(const LogPForm& f, const NewtonPolyhedron& np, unsigned long seed,
                    const NumericParams& prm = {});

const FaceCheck* find_face(const NndReport& r, const std::vector<int>& active);

struct OrbitCheck {
  std::vector<int> orbit;  // chart variables pinned to zero
  Decision decision;
};

struct ChartSmoothness {
  bool log_smooth = false;  // every orbit came back nondegenerate
  std::vector<OrbitCheck> orbits;
};

// Walk all coordinate orbits of the chart.  Face certificates transport to
// orbit certificates; the exact body witness transports through the inverse
// chart matrix, and the transported point is re-verified on the spot.
ChartSmoothness log_smooth_check(const ChartPullback& pb, const NewtonPolyhedron& np,
                                 const NndReport& nnd, unsigned long seed,
                                 const NumericParams& prm = {});

}  // namespace toricform
