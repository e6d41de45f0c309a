#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hypfib/charsums.hpp"
#include "hypfib/ff.hpp"
#include "hypfib/forms.hpp"

namespace hypfib {

// One sector (i, j) of the six-variable system over F_q, q = p^r, with the
// twist data lambda, h, mu. gamma is the least non-residue of F_p.
struct TauSpec {
  std::shared_ptr<const ExtCtx> ctx;
  Surface surface;
  Fq lambda = 1;
  Fq h1 = 0, h2 = 0;
  Fq mu1 = 0, mu2 = 0;
  int i = 0, j = 0;
};

TauSpec MakeTauSpec(const Surface& s, std::uint64_t p, int r, Fq lambda, Fq h1, Fq h2, Fq mu1, Fq mu2, int i = 0,
                    int j = 0);
// Spec over F_p whose twist-1 moment sum equals SumWpij(w, s). The split sum
// carries the phase -lambda(...), so lambda is negated here.
TauSpec TauSpecForSector(const WpParams& w, const Surface& s);

// Precomputed values shared by the counting and singular-locus code.
class TauTables {
 public:
  explicit TauTables(const TauSpec& spec);

  const ExtCtx& ctx() const { return *spec_.ctx; }
  const TauSpec& spec() const { return spec_; }
  std::uint32_t q() const { return q_; }
  int n() const { return spec_.surface.n; }

  Fq gi() const { return gi_; }    // gamma^i
  Fq gni() const { return gni_; }  // gamma^{n i}
  Fq gj() const { return gj_; }
  Fq gnj() const { return gnj_; }
  Fq lambda_bar() const { return lambda_bar_; }

  std::size_t idx(Fq s1, Fq s2) const { return static_cast<std::size_t>(s1) * q_ + s2; }
  // (s1 + h1 t, s2 + h2 t)
  std::size_t shifted(Fq s1, Fq s2, Fq t) const;

  Fq f(std::size_t k) const { return f_[k]; }
  Fq g(std::size_t k) const { return g_[k]; }
  Fq f1(std::size_t k) const { return f1_[k]; }
  Fq f2(std::size_t k) const { return f2_[k]; }
  Fq g1(std::size_t k) const { return g1_[k]; }
  Fq g2(std::size_t k) const { return g2_[k]; }
  Fq hf(std::size_t k) const;  // (h . grad f)
  Fq hg(std::size_t k) const;
  Fq mu_dot(Fq s1, Fq s2) const;

  // gamma^{ni} x^{2n} + gamma^i x^2 f(s) + g(s)
  Fq R1(Fq x, Fq s1, Fq s2) const;
  // gamma^i x^2 + lambda_bar t (mu . s) - lambda_bar tau t^2
  Fq W(Fq x, Fq s1, Fq s2, Fq t, Fq tau) const;
  // W^n + W f_h + g_h, the V-free part of H_tau.
  Fq HRest(Fq x, Fq s1, Fq s2, Fq t, Fq tau) const;

  std::uint32_t cnt(Fq a) const { return cnt_[a]; }  // #{u : u^{2n} = a}
  const std::vector<Fq>& roots(Fq a) const { return roots_[a]; }

 private:
  TauSpec spec_;
  std::uint32_t q_;
  Fq gi_, gni_, gj_, gnj_, lambda_bar_;
  std::vector<Fq> f_, g_, f1_, f2_, g1_, g2_;
  std::vector<std::uint32_t> cnt_;
  std::vector<std::vector<Fq>> roots_;
};

// G = -u^{2n} + R1 and H_tau at an explicit point.
Fq EvalG(const TauTables& tt, Fq u, Fq x, Fq s1, Fq s2);
Fq EvalH(const TauTables& tt, Fq tau, Fq v, Fq x, Fq s1, Fq s2, Fq t);

// Six-variable N(tau) for every tau, indexed by the F_q encoding. O(q^4).
std::vector<std::uint64_t> CountN6All(const TauSpec& spec, bool force = false);
std::uint64_t CountN6(const TauSpec& spec, Fq tau, bool force = false);
// #{G_1 = G_2 = 0} in F_q^6, with no condition on tau.
std::uint64_t CountPairSolutions(const TauSpec& spec, bool force = false);
// Five-variable count after eliminating y. O(q^3).
std::uint64_t CountN5(const TauSpec& spec, Fq tau, bool force = false);
std::uint64_t CountN1(const TauSpec& spec, Fq tau, bool force = false);
// Independent of tau.
std::uint64_t CountN2(const TauSpec& spec, bool force = false);

struct TauRow {
  Fq tau = 0;
  std::uint64_t n6 = 0, n5 = 0, n1 = 0, n2 = 0;
  std::int64_t sing = -1, k1 = -1, k2 = -1, l = -1;  // -1 when not computed
};

// One row per tau; the locus columns are filled when with_locus is set.
std::vector<TauRow> TauProfile(const TauSpec& spec, bool with_locus, bool force = false);

}  // namespace hypfib
