#ifndef MOGLIB_SPECIAL_HPP
#define MOGLIB_SPECIAL_HPP

namespace moglib {

// log(1 - exp(-x)) for x > 0, stable for both tiny and huge x.
double log1mexp(double x);

// Upper incomplete gamma function Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt,
// s > 0, x >= 0. Series for x < s+1, Lentz continued fraction otherwise.
double upper_incomplete_gamma(double s, double x);

// Regularized upper tail Q(s, x) = Gamma(s, x) / Gamma(s).
double regularized_gamma_q(double s, double x);

// Chi-square survival function P[X > x] with df degrees of freedom.
double chi_square_sf(double x, int df);

}  // namespace moglib

#endif
