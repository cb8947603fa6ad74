#include "dio/cost_model.hpp"

#include <cstddef>
#include <sstream>

#include "dio/trace.hpp"

namespace dio {

namespace {

mpq_class pow_q(const mpq_class& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

mpq_class ratio(const Integer& num, const Integer& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

Ineq17Inputs make_inputs(const Problem& p, const EuclidTrace& t,
                         const std::vector<Integer>& f_values, long j) {
  // chain[0] = a_1; f_values[0] = f(a_1, a_2); quotients[0] = q_1.
  return Ineq17Inputs{
      f_values[static_cast<std::size_t>(j + 1)],
      f_values[static_cast<std::size_t>(j)],
      t.quotients[static_cast<std::size_t>(j - 1)],
      t.chain[static_cast<std::size_t>(j - 1)],
      t.chain[static_cast<std::size_t>(j)],
      t.chain[static_cast<std::size_t>(j + 1)],
      p.c(),
  };
}

}  // namespace

Ineq17Eval evaluate_ineq17(const Ineq17Inputs& in) {
  const auto e_lhs = static_cast<unsigned long>(1 + bit_length(in.x));
  const auto e_rhs = static_cast<unsigned long>(bit_length(in.a_jp1));

  mpq_class lhs = mpq_class(in.f_jp2 * in.f_jp2) * pow_q(ratio(in.y, in.a_j), 2 * e_lhs);

  mpq_class a_term = ratio(in.c * in.a_jp2 - in.c * in.a_j, in.a_j * in.a_jp2);
  mpq_class b_term = ratio(in.f_jp2 * in.a_jp1, in.a_jp2);
  mpq_class base = a_term * a_term + b_term * b_term + 2 * a_term * b_term;
  mpq_class rhs = mpq_class(in.c * in.c) * pow_q(base, e_rhs);

  const bool holds = lhs <= rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

std::optional<Ineq17Inputs> ineq17_inputs(const Problem& p, long j) {
  DeaRRun run = dea_r_recorded(p);
  if (!is_solution(run.outcome)) return std::nullopt;
  const long i1 = static_cast<long>(run.f_values.size());
  if (j < 1 || j > i1 - 2) return std::nullopt;
  EuclidTrace t = euclid_trace(p);
  return make_inputs(p, t, run.f_values, j);
}

IneqStatus check_ineq17(const Problem& p, long j) {
  auto in = ineq17_inputs(p, j);
  if (!in) return IneqStatus::not_applicable;
  return evaluate_ineq17(*in).holds ? IneqStatus::holds : IneqStatus::fails;
}

CostLedger ledger(const Problem& p) {
  DeaRRun r_run = dea_r_recorded(p);
  if (!is_solution(r_run.outcome))
    fail(Error::Code::not_solvable, "gcd(a, b) does not divide c");
  const long i1 = static_cast<long>(r_run.f_values.size());
  if (i1 < 3)
    fail(Error::Code::not_applicable,
         "halting index below 3: no level executes the recursive return in both "
         "algorithms' comparable range");

  DeaOptdRun o_run = dea_optd_recorded(p);
  EuclidTrace t = euclid_trace(p);

  CostLedger led;
  led.total_dea_r = 0;
  led.total_dea_optd = 0;
  for (long j = 1; j <= i1 - 2; ++j) {
    const auto& rs = r_run.steps[static_cast<std::size_t>(j - 1)];
    const auto& os = o_run.steps[static_cast<std::size_t>(j - 1)];
    Integer cost_r = cost_add(rs.c_bits, rs.prod_bits) +
                     cost_mul(rs.num_bits, rs.divisor_bits) +
                     cost_mul(rs.f_next_bits, rs.a_bits);
    Integer cost_o = cost_add(os.f1_bits, os.prod_bits) +
                     cost_mul(os.a_bits, os.b_bits) + cost_mul(os.q_bits, os.f2_bits);
    led.total_dea_r += cost_r;
    led.total_dea_optd += cost_o;
    const bool cheaper = cost_o <= cost_r;
    led.steps.push_back({j, std::move(cost_r), std::move(cost_o), cheaper});
    auto eval = evaluate_ineq17(make_inputs(p, t, r_run.f_values, j));
    led.ineq17.push_back(eval.holds ? IneqStatus::holds : IneqStatus::fails);
  }
  return led;
}

std::string ledger_csv(const std::string& problem_id, const CostLedger& led) {
  std::ostringstream out;
  out << "problem_id,j,cost_dea_r,cost_dea_optd,optd_cheaper,ineq17_status\n";
  for (std::size_t i = 0; i < led.steps.size(); ++i) {
    const auto& s = led.steps[i];
    out << problem_id << ',' << s.j << ',' << s.cost_dea_r << ',' << s.cost_dea_optd
        << ',' << (s.optd_cheaper ? "true" : "false") << ','
        << to_string(led.ineq17[i]) << '\n';
  }
  return out.str();
}

}  // namespace dio
