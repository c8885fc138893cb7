#pragma once

#include "vdc/arith.hpp"
#include "vdc/suites.hpp"

// Parameterised check implementations behind the public suites: the module
// suites run them at default scales, the acceptance battery at the pinned
// ones.

namespace vdc::checks {

// periodic
CheckResult local_products(i64 pmax);
CheckResult basic_norms();
CheckResult roundtrip_and_shifts(unsigned seed);
CheckResult positivity_algebra(unsigned seed);
CheckResult product_identities();
CheckResult series_json();

// characters
CheckResult gauss_sums(i64 qmax);
CheckResult induced_gauss(i64 rmax);
CheckResult enumeration_shapes();
CheckResult additive_reconstruction(i64 rmax);
CheckResult c_coefficient_bounds();
CheckResult postnikov_family();
CheckResult truncated_log_identity();
CheckResult phase_map_family();

// approximants
CheckResult small_values();
CheckResult principal_link();
CheckResult truncated_identity(i64 qmax, i64 Q);
CheckResult completed_identities(i64 qmax, i64 R);
CheckResult sharp_approximant();
CheckResult sieve_transform(i64 Q, int trials, unsigned seed);
CheckResult wedge_norm_bounds();

// correlations
CheckResult class_membership();
CheckResult triple_gap_oracle();
CheckResult triple_gap_trend(const SuitePaths &paths);
CheckResult char_gap_cases(const SuitePaths &paths);
CheckResult denominator_counts();
CheckResult pair_congruence_sum();
CheckResult triple_divisibility_sum();

// damping
CheckResult atoms();
CheckResult atom_crt();
CheckResult omega_masses();
CheckResult domination_cases();
CheckResult domination_family();
CheckResult damping_build_exceptional();
CheckResult damping_build_unexceptional();
CheckResult damping_json();

// expweight
CheckResult gamma_function();
CheckResult weight_transform_bounds();
CheckResult quadratic_gauss();
CheckResult exp_sums();
CheckResult weight_split_check();
CheckResult archimedean_suite(const SuitePaths &paths);
CheckResult sum_integral_trend(const SuitePaths &paths);
CheckResult offpeak_trend(const SuitePaths &paths);

// zeros
CheckResult zero_ingestion(const SuitePaths &paths);
CheckResult scale_logic();
CheckResult explicit_formula(const SuitePaths &paths);
CheckResult page_bound();

// optimization / pipeline
CheckResult optimization_exact();
CheckResult pipeline_end_to_end(const SuitePaths &paths);

} // namespace vdc::checks
