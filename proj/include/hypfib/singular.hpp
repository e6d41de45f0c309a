#pragma once

#include <cstdint>
#include <vector>

#include "hypfib/tau.hpp"

namespace hypfib {

// Point of P^5 with coordinates (u, v, x, s1, s2, t); last nonzero coordinate is 1.
struct P5Point {
  Fq u = 0, v = 0, x = 0, s1 = 0, s2 = 0, t = 0;
  friend auto operator<=>(const P5Point&, const P5Point&) = default;
};

// Point of P^4 with coordinates (x, z, s1, s2, t); last nonzero coordinate is 1.
struct P4Point {
  Fq x = 0, z = 0, s1 = 0, s2 = 0, t = 0;
  friend auto operator<=>(const P4Point&, const P4Point&) = default;
};

// The 2 x 6 Jacobian of (G, H_tau) at a point, in the order (u, v, x, s1, s2, t).
struct JacobianRows {
  Fq a[6];
  Fq b[6];
};
JacobianRows Jacobian(const TauTables& tt, Fq tau, const P5Point& P);
bool RankAtMostOne(const JacobianRows& J, const ExtCtx& c);

// Every point of V_tau = {G = H_tau = 0} sorted into the systems of the
// singular-locus decomposition. Each list is computed from its own equations.
struct LocusAtTau {
  Fq tau = 0;
  std::vector<P5Point> sing;  // V_tau with rank J <= 1
  std::vector<P5Point> k1;    // first row of J vanishes
  std::vector<P5Point> k2;    // second row of J vanishes
  std::vector<P5Point> sys0;  // dH/dT = 0, (S1,S2) minor = 0, u = v = 0
  std::vector<P5Point> l;     // sys0 points that are singular
  std::vector<P5Point> baseline;  // u = x = s1 = s2 = 0
};

// Rejects q > 169.
LocusAtTau EnumerateLocus(const TauSpec& spec, Fq tau, bool force = false);

enum class LocusSystem { kSing, kK1, kK2, kL, kSys0 };
std::vector<P5Point> SystemPoints(const TauSpec& spec, LocusSystem system, Fq tau, bool force = false);

// sing = K1 u K2 u L as sets.
bool DecompositionHolds(const LocusAtTau& loc);

// The four equations cutting out V in P^4 (independent of tau).
struct AuxValues {
  Fq e1, e2, e3, e4;
  Fq U1, U2, W;  // W = gamma^i x^2 + t z
};
AuxValues EvalAux(const TauTables& tt, const P4Point& P);
std::vector<P4Point> AuxPoints(const TauSpec& spec, bool force = false);

// At V-points, the fourth equation equals W U1 + U2, so W U1 = -U2 there.
struct MinorSignCheck {
  std::size_t points = 0;
  std::size_t corrected_violations = 0;  // W U1 != -U2
  std::size_t literal_violations = 0;    // W U1 != U2
};
MinorSignCheck CheckMinorSign(const TauSpec& spec, bool force = false);

// sys0 points with t != 0 mapped to (x, lambda_bar(mu . s - tau t), s, t)
// and tested against the equations of V.
struct Sys0VsAux {
  std::size_t sys0_t_nonzero = 0;
  std::size_t missing_from_v = 0;
};
Sys0VsAux CompareSys0WithAux(const TauSpec& spec, Fq tau, bool force = false);

// Division of the eliminant by gamma^{ni}X^{2n} + gamma^i X^2 f + g as
// polynomials in X, at random (s1, s2, t) in F_p. Counts of points with a
// nonzero remainder, for the sign-corrected and the literal eliminant.
struct EliminantCheck {
  int samples = 0;
  int corrected_nonzero = 0;
  int literal_nonzero = 0;
};
EliminantCheck CheckEliminant(const TauSpec& spec, int samples, std::uint64_t seed);

// Number of tau for which |sing V_tau| exceeds 2n.
struct BadTauReport {
  std::size_t bad = 0;
  std::size_t max_sing = 0;
  std::vector<std::size_t> sing_counts;  // indexed by tau
};
BadTauReport CountBadTau(const TauSpec& spec, bool force = false);

}  // namespace hypfib
