#include "kpell/identities.hpp"

#include "kpell/ring.hpp"
#include "kpell/seq.hpp"

#include <string>

namespace kpell {

namespace {

std::string part_line(const char* name, bool ok) {
  return std::string(name) + (ok ? "=pass" : "=fail");
}

} // namespace

VerificationReport check_lemma21(long long k, long long n) {
  Int p = pell(k, n);
  Int q = pell_lucas(k, n);
  long long d = 1 + k;

  RingInt phi_n = ring_pow(phi_root(k), n);
  RingInt two_phi_n{2 * phi_n.a, 2 * phi_n.b, d};

  // (i) Q + 2tP = 2 phi^n
  bool part_i = RingInt{q, 2 * p, d} == two_phi_n;
  // (ii) Q - 2tP = 2 conj(phi)^n = conj(2 phi^n)
  bool part_ii = RingInt{q, -2 * p, d} == ring_conj(two_phi_n);
  // (iii) Q^2 - 4(1+k) P^2 = 4 (-k)^n
  Int lhs3 = q * q - Int(4) * d * p * p;
  Int rhs3 = 4 * neg_k_pow(k, n);
  bool part_iii = lhs3 == rhs3;

  VerificationReport r;
  r.id = "lemma21";
  r.params = {{"k", k}, {"n", n}};
  r.mode = Mode::Exact;
  r.lhs = decimal(lhs3);
  r.rhs = decimal(rhs3);
  r.status =
      part_i && part_ii && part_iii ? Status::Pass : Status::Fail;
  r.detail = part_line("i", part_i) + ";" + part_line("ii", part_ii) + ";" +
             part_line("iii", part_iii);
  return r;
}

VerificationReport check_lemma22(long long k, long long m, long long n) {
  Int pm = pell(k, m);
  Int pn = pell(k, n);
  Int qm = pell_lucas(k, m);
  Int qn = pell_lucas(k, n);
  Int pmn = pell(k, m + n);
  Int qmn = pell_lucas(k, m + n);

  // (i) 2 P_{m+n} = P_m Q_n + P_n Q_m
  Int lhs1 = 2 * pmn;
  Int rhs1 = pm * qn + pn * qm;
  bool part_i = lhs1 == rhs1;
  // (ii) 2 Q_{m+n} = Q_m Q_n + 4(1+k) P_m P_n
  Int lhs2 = 2 * qmn;
  Int rhs2 = qm * qn + Int(4) * (1 + k) * pm * pn;
  bool part_ii = lhs2 == rhs2;

  VerificationReport r;
  r.id = "lemma22";
  r.params = {{"k", k}, {"m", m}, {"n", n}};
  r.mode = Mode::Exact;
  r.lhs = decimal(lhs1) + "," + decimal(lhs2);
  r.rhs = decimal(rhs1) + "," + decimal(rhs2);
  r.status = part_i && part_ii ? Status::Pass : Status::Fail;
  r.detail = part_line("i", part_i) + ";" + part_line("ii", part_ii);
  return r;
}

} // namespace kpell
