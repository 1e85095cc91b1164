#pragma once

#include <stdexcept>
#include <string>

namespace sumrank {

/// Error classes surfaced by the library; each maps to a distinct CLI exit code.
enum class Errc {
    invalid_argument,
    non_prime_p,
    ell_not_dividing_q_minus_1,
    bad_degree,
    div_by_zero,
    zero_beta,
    zero_entry,
    bad_subfield_degree,
    length_mismatch,
    p_divides_ell,
    non_coprime_factors,
    component_count_mismatch,
    not_root_of_unity,
    bad_partition,
    budget_exceeded,
    not_monic,
    not_divisor,
    requires_n_equals_m,
    conjugate_evaluation_points,
    dependent_basis,
    assumption_violated,
    verification_failed,
    cross_check_mismatch,
    weight_infeasible,
    parse_error,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) raise(code, msg);
}

const char* errc_name(Errc code);

}  // namespace sumrank
