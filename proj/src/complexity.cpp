#include "adic2/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace adic2 {

namespace {

mpz_class prefix_value(const BitString& s, unsigned n) {
  mpz_class x = 0;
  for (unsigned i = 0; i < n; ++i)
    if (s[i] & 1) mpz_setbit(x.get_mpz_t(), i);
  return x;
}

void require_prefix(const BitString& s, unsigned n) {
  if (n < 1 || n > s.size())
    fail(errc::invalid_argument, "prefix length out of range");
}

// candidate ordering: value, then q, then |f|, then positive f
struct Cand {
  mpz_class value; // max(|f|, q), q normalized positive
  mpz_class f;
  mpz_class q;
  bool valid = false;
};

bool better(const Cand& a, const Cand& b) {
  if (!b.valid) return true;
  if (a.value != b.value) return a.value < b.value;
  if (a.q != b.q) return a.q < b.q;
  mpz_class af = abs(a.f), bf = abs(b.f);
  if (af != bf) return af < bf;
  return a.f > b.f;
}

void consider(Cand& best, mpz_class f, mpz_class q) {
  if (q == 0) return;
  if (q < 0) {
    q = -q;
    f = -f;
  }
  Cand c;
  c.f = std::move(f);
  c.q = std::move(q);
  c.value = std::max(mpz_class(abs(c.f)), c.q);
  c.valid = true;
  if (better(c, best)) best = c;
}

} // namespace

AdicMin adic_bruteforce(const BitString& s, unsigned n) {
  require_prefix(s, n);
  if (n > 44) fail(errc::prefix_too_long, "exhaustive scan guarded at N = 44");
  mpz_class M = mpz_class(1) << n;
  mpz_class x = prefix_value(s, n);
  mpz_class step = (2 * x) % M;

  Cand best;
  mpz_class r = x % M; // q * x mod M for the current odd q
  for (mpz_class q = 1; !best.valid || q <= best.value; q += 2) {
    mpz_class f = (2 * r <= M) ? r : mpz_class(r - M);
    mpz_class value = std::max(mpz_class(abs(f)), q);
    if (!best.valid || value < best.value) {
      best.f = f;
      best.q = q;
      best.value = value;
      best.valid = true;
    }
    r += step;
    if (r >= M) r -= M;
  }
  return {best.value, {best.f, best.q, n}};
}

namespace {

struct Vec {
  mpz_class f, q;
};

mpz_class dot(const Vec& a, const Vec& b) { return a.f * b.f + a.q * b.q; }
mpz_class wedge(const Vec& a, const Vec& b) { return a.f * b.q - a.q * b.f; }

mpz_class round_div(mpz_class n, mpz_class d) {
  if (d < 0) {
    d = -d;
    n = -n;
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  mpz_class r = n - q * d;
  if (2 * r >= d) q += 1;
  return q;
}

// Lagrange (Gauss) reduction; leaves a no longer than b.
void reduce_basis(Vec& a, Vec& b) {
  for (;;) {
    if (dot(a, a) > dot(b, b)) std::swap(a, b);
    mpz_class m = round_div(dot(a, b), dot(a, a));
    if (m == 0) return;
    b.f -= m * a.f;
    b.q -= m * a.q;
  }
}

struct Iv {
  bool empty = false;
  bool all = false;
  mpz_class lo, hi;
};

// alpha values with |A + alpha*B| <= R
Iv interval(const mpz_class& A, const mpz_class& B, const mpz_class& R) {
  Iv iv;
  if (B == 0) {
    if (abs(A) <= R)
      iv.all = true;
    else
      iv.empty = true;
    return iv;
  }
  mpz_class n1 = -R - A, n2 = R - A;
  if (B > 0) {
    mpz_cdiv_q(iv.lo.get_mpz_t(), n1.get_mpz_t(), B.get_mpz_t());
    mpz_fdiv_q(iv.hi.get_mpz_t(), n2.get_mpz_t(), B.get_mpz_t());
  } else {
    mpz_cdiv_q(iv.lo.get_mpz_t(), n2.get_mpz_t(), B.get_mpz_t());
    mpz_fdiv_q(iv.hi.get_mpz_t(), n1.get_mpz_t(), B.get_mpz_t());
  }
  if (iv.lo > iv.hi) iv.empty = true;
  return iv;
}

// Scan every odd-q lattice point with sup norm <= R: points are
// t + alpha*a + beta*b with the coset offset t Babai-reduced, a the short
// basis vector. Per beta-slice only O(1) candidate alphas matter: interval
// endpoints, the |f| / |q| vertices, and the |f| = |q| crossings.
Cand scan_ball(const Vec& t, const Vec& a, const Vec& b, const mpz_class& R) {
  Cand best;
  if (R < 0) return best;
  mpz_class W = abs(wedge(b, a)); // 2^(n+1)
  mpz_class num =
      (R + abs(t.f)) * abs(a.q) + (R + abs(t.q)) * abs(a.f);
  mpz_class beta_max;
  mpz_fdiv_q(beta_max.get_mpz_t(), num.get_mpz_t(), W.get_mpz_t());
  beta_max += 1;

  for (mpz_class beta = -beta_max; beta <= beta_max; ++beta) {
    mpz_class Af = t.f + beta * b.f;
    mpz_class Aq = t.q + beta * b.q;
    Iv ivf = interval(Af, a.f, R);
    Iv ivq = interval(Aq, a.q, R);
    if (ivf.empty || ivq.empty) continue;
    bool has_lo = false, has_hi = false;
    mpz_class lo, hi;
    auto merge = [&](const Iv& iv) {
      if (iv.all) return;
      if (!has_lo || iv.lo > lo) lo = iv.lo;
      if (!has_hi || iv.hi < hi) hi = iv.hi;
      has_lo = has_hi = true;
    };
    merge(ivf);
    merge(ivq);
    if (!has_lo) continue; // a = 0 cannot happen: basis vectors are nonzero
    if (lo > hi) continue;

    std::set<mpz_class> cands{lo, hi};
    auto push_near = [&](const mpz_class& v) {
      for (int off = -1; off <= 1; ++off) {
        mpz_class w = v + off;
        if (w < lo)
          w = lo;
        else if (w > hi)
          w = hi;
        cands.insert(w);
      }
    };
    if (a.q != 0) push_near(round_div(-Aq, a.q));
    if (a.f != 0) push_near(round_div(-Af, a.f));
    mpz_class d1 = a.f - a.q, d2 = a.f + a.q;
    if (d1 != 0) {
      mpz_class v;
      mpz_class nn = -(Af - Aq);
      mpz_fdiv_q(v.get_mpz_t(), nn.get_mpz_t(), d1.get_mpz_t());
      push_near(v);
    }
    if (d2 != 0) {
      mpz_class v;
      mpz_class nn = -(Af + Aq);
      mpz_fdiv_q(v.get_mpz_t(), nn.get_mpz_t(), d2.get_mpz_t());
      push_near(v);
    }
    for (const mpz_class& alpha : cands) {
      mpz_class f = Af + alpha * a.f;
      mpz_class q = Aq + alpha * a.q;
      if (abs(f) > R || abs(q) > R) continue;
      consider(best, std::move(f), std::move(q));
    }
  }
  return best;
}

struct LatticeSetup {
  Vec a, b, t;
};

LatticeSetup setup_lattice(const BitString& s, unsigned n) {
  mpz_class x = prefix_value(s, n);
  mpz_class M = mpz_class(1) << n;
  Vec a{2 * x, 2}; // even-q sublattice basis
  Vec b{M, 0};
  reduce_basis(a, b);
  Vec t{x, 1}; // odd-q coset offset
  mpz_class c = round_div(wedge(t, a), wedge(b, a));
  t.f -= c * b.f;
  t.q -= c * b.q;
  c = round_div(dot(t, a), dot(a, a));
  t.f -= c * a.f;
  t.q -= c * a.q;
  return {std::move(a), std::move(b), std::move(t)};
}

mpz_class sup(const Vec& v) { return std::max(mpz_class(abs(v.f)), mpz_class(abs(v.q))); }

} // namespace

AdicMin adic_lattice(const BitString& s, unsigned n) {
  require_prefix(s, n);
  LatticeSetup L = setup_lattice(s, n);

  // radius doubling from the shortest available scale until feasible
  mpz_class R = std::max(mpz_class(1), std::min(sup(L.a), sup(L.t)));
  Cand found;
  for (;;) {
    found = scan_ball(L.t, L.a, L.b, R);
    if (found.valid) break;
    R <<= 1;
  }
  // any nonempty ball already contains a global minimizer; rescan at that
  // exact radius so the tie-break sees every minimal point
  Cand best = scan_ball(L.t, L.a, L.b, found.value);
  if (!best.valid || best.value != found.value)
    fail(errc::invalid_argument, "internal: lattice rescan lost the minimum");
  // certificate: the strictly smaller ball is empty
  Cand none = scan_ball(L.t, L.a, L.b, best.value - 1);
  if (none.valid)
    fail(errc::invalid_argument, "internal: lattice certification failed");
  return {best.value, {best.f, best.q, n}};
}

bool lattice_ball_has_point(const BitString& s, unsigned n,
                            const mpz_class& radius) {
  require_prefix(s, n);
  LatticeSetup L = setup_lattice(s, n);
  return scan_ball(L.t, L.a, L.b, radius).valid;
}

std::vector<unsigned> berlekamp_massey_profile(const BitString& s) {
  size_t N = s.size();
  std::vector<unsigned> out;
  out.reserve(N);
  std::vector<std::uint8_t> C{1}, B{1};
  unsigned L = 0, m = 1;
  for (size_t n = 0; n < N; ++n) {
    int d = s[n] & 1;
    for (size_t i = 1; i <= L && i < C.size(); ++i)
      if (C[i]) d ^= s[n - i] & 1;
    if (d == 0) {
      ++m;
    } else if (2 * L <= n) {
      std::vector<std::uint8_t> T = C;
      if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
      for (size_t i = 0; i < B.size(); ++i) C[i + m] ^= B[i];
      L = static_cast<unsigned>(n + 1 - L);
      B = std::move(T);
      m = 1;
    } else {
      if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
      for (size_t i = 0; i < B.size(); ++i) C[i + m] ^= B[i];
      ++m;
    }
    out.push_back(L);
  }
  return out;
}

double log2_mpz(const mpz_class& v) {
  if (v <= 0) fail(errc::invalid_argument, "log2 of a nonpositive value");
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(d) + static_cast<double>(exp);
}

ComplexityProfile adic_profile(const BitString& s, adic_method method) {
  if (s.empty()) fail(errc::invalid_argument, "empty sequence");
  ComplexityProfile p;
  p.bits = s;
  std::vector<unsigned> lin = berlekamp_massey_profile(s);
  for (unsigned n = 1; n <= s.size(); ++n) {
    AdicMin m;
    switch (method) {
      case adic_method::bruteforce:
        m = adic_bruteforce(s, n);
        break;
      case adic_method::lattice:
        m = adic_lattice(s, n);
        break;
      case adic_method::auto_select: {
        m = adic_lattice(s, n);
        if (n <= 24) {
          AdicMin check = adic_bruteforce(s, n);
          if (check.lambda_exact != m.lambda_exact ||
              check.rep.f != m.rep.f || check.rep.q != m.rep.q)
            fail(errc::invalid_argument,
                 "internal: lattice and exhaustive scans disagree");
        }
        break;
      }
    }
    // definition soundness for the returned representative
    mpz_class M = mpz_class(1) << n;
    mpz_class x = prefix_value(s, n);
    if (m.rep.q <= 0 || mpz_tstbit(m.rep.q.get_mpz_t(), 0) == 0 ||
        (m.rep.q * x - m.rep.f) % M != 0)
      fail(errc::invalid_argument, "internal: unsound representative");
    ProfileRow row;
    row.n = n;
    row.lambda_exact = m.lambda_exact;
    row.lambda_log2 = log2_mpz(m.lambda_exact);
    row.rep = m.rep;
    row.lin_complexity = lin[n - 1];
    p.rows.push_back(std::move(row));
  }
  InvariantReport rep = check_profile_invariants(p);
  if (!rep.ok) fail(errc::invalid_argument, "internal: " + rep.message);
  return p;
}

InvariantReport check_profile_invariants(const ComplexityProfile& p) {
  InvariantReport r;
  for (size_t i = 0; i + 1 < p.rows.size(); ++i) {
    const mpz_class& cur = p.rows[i].lambda_exact;
    const mpz_class& nxt = p.rows[i + 1].lambda_exact;
    unsigned n = p.rows[i].n;
    if (nxt < cur) {
      r.ok = false;
      r.first_violation_n = n + 1;
      r.message = "Lambda decreases from N = " + std::to_string(n);
      return r;
    }
    mpz_class bound = cur * cur + (mpz_class(1) << n);
    if (nxt * cur > bound) {
      r.ok = false;
      r.first_violation_n = n + 1;
      r.message = "step inequality fails from N = " + std::to_string(n);
      return r;
    }
  }
  return r;
}

std::vector<BoundReport> height_degree_bounds(const IntPoly& h,
                                         const ComplexityProfile& p) {
  int d = h.degree();
  if (d < 2) fail(errc::degree_too_low, "bounds need degree at least 2");
  if (h.has_rational_root())
    fail(errc::rational_root, "bounds assume no rational roots");
  mpz_class H = h.height_sum();
  double logH = log2_mpz(H);
  std::vector<BoundReport> out;
  out.reserve(p.rows.size());
  for (const ProfileRow& row : p.rows) {
    BoundReport b;
    b.n = row.n;
    b.d = static_cast<unsigned>(d);
    b.height = H;
    b.lower = static_cast<double>(row.n) / d - logH / d;
    b.upper = static_cast<double>(d - 1) * row.n / d + logH / d + 1.3;
    mpz_class lhs;
    mpz_pow_ui(lhs.get_mpz_t(), row.lambda_exact.get_mpz_t(),
               static_cast<unsigned long>(d));
    lhs *= H;
    b.lower_holds = lhs >= (mpz_class(1) << row.n);
    b.upper_holds = row.lambda_log2 <= b.upper + 1e-9;
    out.push_back(std::move(b));
  }
  return out;
}

RothReport roth_observation(const ComplexityProfile& p, double eps,
                            bool aperiodic) {
  RothReport r;
  r.eps = eps;
  r.aperiodic_claimed = aperiodic;
  for (const ProfileRow& row : p.rows) {
    if (row.lambda_log2 <= static_cast<double>(row.n) / (2.0 + eps))
      r.violations.push_back(row.n);
  }
  if (!r.violations.empty()) r.largest_violation = r.violations.back();

  size_t len = p.rows.size();
  if (len >= 8) {
    size_t k = std::min<size_t>(8, len / 2);
    bool plateau = true;
    for (size_t i = len - k; i < len; ++i)
      if (p.rows[i].lambda_exact != p.rows[len - k].lambda_exact)
        plateau = false;
    if (plateau && aperiodic)
      r.warning =
          "2-adic complexity has plateaued; the sequence looks eventually "
          "periodic, so the aperiodicity claim is suspect";
  }
  if (!aperiodic)
    r.warning = "aperiodicity not claimed by caller; observation only";
  return r;
}

std::string profile_csv(const ComplexityProfile& p) {
  std::ostringstream out;
  out << "N,Lambda,lambda_log2,f,q,L\n";
  out << std::fixed << std::setprecision(6);
  for (const ProfileRow& row : p.rows) {
    out << row.n << ',' << row.lambda_exact.get_str() << ','
        << row.lambda_log2 << ',' << row.rep.f.get_str() << ','
        << row.rep.q.get_str() << ',' << row.lin_complexity << '\n';
  }
  return out.str();
}

} // namespace adic2
