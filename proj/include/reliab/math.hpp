#pragma once

// Scalar special functions used across the library: log-Beta, the regularized
// incomplete beta function and its inverse, and the standard normal CDF and
// quantile. Everything is templated on the scalar type and free of global
// state so the samplers can call these from worker threads.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace reliab {

template <typename Scalar>
Scalar log_beta(Scalar a, Scalar b) {
  if (!(a > Scalar(0)) || !(b > Scalar(0))) {
    throw std::domain_error("log_beta: parameters must be positive");
  }
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace detail {

// Continued-fraction core of the incomplete beta function (modified Lentz).
template <typename Scalar>
Scalar beta_continued_fraction(Scalar a, Scalar b, Scalar x) {
  constexpr int kMaxIter = 400;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar fpmin = std::numeric_limits<Scalar>::min() / eps;

  const Scalar qab = a + b;
  const Scalar qap = a + Scalar(1);
  const Scalar qam = a - Scalar(1);
  Scalar c = Scalar(1);
  Scalar d = Scalar(1) - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = Scalar(1) / d;
  Scalar h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const Scalar m2 = Scalar(2 * m);
    Scalar aa = Scalar(m) * (b - Scalar(m)) * x / ((qam + m2) * (a + m2));
    d = Scalar(1) + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = Scalar(1) + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = Scalar(1) / d;
    h *= d * c;
    aa = -(a + Scalar(m)) * (qab + Scalar(m)) * x / ((a + m2) * (qap + m2));
    d = Scalar(1) + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = Scalar(1) + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = Scalar(1) / d;
    const Scalar del = d * c;
    h *= del;
    if (std::abs(del - Scalar(1)) <= eps) break;
  }
  return h;
}

}  // namespace detail

// Regularized incomplete beta function I_x(a, b).
template <typename Scalar>
Scalar reg_inc_beta(Scalar a, Scalar b, Scalar x) {
  if (!(a > Scalar(0)) || !(b > Scalar(0))) {
    throw std::domain_error("reg_inc_beta: parameters must be positive");
  }
  if (x < Scalar(0) || x > Scalar(1)) {
    throw std::domain_error("reg_inc_beta: x outside [0,1]");
  }
  if (x == Scalar(0)) return Scalar(0);
  if (x == Scalar(1)) return Scalar(1);
  const Scalar log_front =
      a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  if (x < (a + Scalar(1)) / (a + b + Scalar(2))) {
    return std::exp(log_front) * detail::beta_continued_fraction(a, b, x) / a;
  }
  return Scalar(1) -
         std::exp(log_front) *
             detail::beta_continued_fraction(b, a, Scalar(1) - x) / b;
}

// Inverse of I_x(a, b) in x, solved by a Newton iteration that is kept inside
// a shrinking bisection bracket so it cannot escape (0, 1) even when the
// density diverges at the support boundary (a < 1 or b < 1).
template <typename Scalar>
Scalar inv_reg_inc_beta(Scalar a, Scalar b, Scalar u) {
  if (!(u > Scalar(0)) || !(u < Scalar(1))) {
    throw std::domain_error("inv_reg_inc_beta: u outside (0,1)");
  }
  const Scalar log_norm = log_beta(a, b);
  Scalar lo = Scalar(0);
  Scalar hi = Scalar(1);
  Scalar x = a / (a + b);  // start at the mean
  for (int iter = 0; iter < 200; ++iter) {
    const Scalar f = reg_inc_beta(a, b, x) - u;
    if (f > Scalar(0)) {
      hi = x;
    } else {
      lo = x;
    }
    if (std::abs(f) < Scalar(1e-15) || hi - lo < Scalar(1e-15)) break;
    const Scalar log_pdf = (a - Scalar(1)) * std::log(x) +
                           (b - Scalar(1)) * std::log1p(-x) - log_norm;
    Scalar step = f * std::exp(-log_pdf);
    Scalar next = x - step;
    if (!(next > lo) || !(next < hi)) {
      next = (lo + hi) / Scalar(2);  // Newton left the bracket; bisect
    }
    if (next == x) break;
    x = next;
  }
  return x;
}

// Standard normal CDF.
template <typename Scalar>
Scalar normal_cdf(Scalar z) {
  return Scalar(0.5) * std::erfc(-z / std::sqrt(Scalar(2)));
}

// Standard normal quantile, Wichura's AS 241 (double precision branch).
template <typename Scalar>
Scalar normal_quantile(Scalar p) {
  if (!(p > Scalar(0)) || !(p < Scalar(1))) {
    throw std::domain_error("normal_quantile: p outside (0,1)");
  }
  const Scalar q = p - Scalar(0.5);
  if (std::abs(q) <= Scalar(0.425)) {
    const Scalar r = Scalar(0.180625) - q * q;
    return q *
           (((((((Scalar(2509.0809287301226727) * r +
                  Scalar(33430.575583588128105)) *
                     r +
                 Scalar(67265.770927008700853)) *
                    r +
                Scalar(45921.953931549871457)) *
                   r +
               Scalar(13731.693765509461125)) *
                  r +
              Scalar(1971.5909503065514427)) *
                 r +
             Scalar(133.14166789178437745)) *
                r +
            Scalar(3.387132872796366608)) /
           (((((((Scalar(5226.495278852545703) * r +
                  Scalar(28729.085735721942674)) *
                     r +
                 Scalar(39307.89580009271061)) *
                    r +
                Scalar(21213.794301586595867)) *
                   r +
               Scalar(5394.1960214247511077)) *
                  r +
              Scalar(687.1870074920579083)) *
                 r +
             Scalar(42.313330701600911252)) *
                r +
            Scalar(1));
  }
  Scalar r = (q < Scalar(0)) ? p : Scalar(1) - p;
  r = std::sqrt(-std::log(r));
  Scalar value;
  if (r <= Scalar(5)) {
    r -= Scalar(1.6);
    value = (((((((Scalar(7.7454501427834140764e-4) * r +
                   Scalar(0.0227238449892691845833)) *
                      r +
                  Scalar(0.24178072517745061177)) *
                     r +
                 Scalar(1.27045825245236838258)) *
                    r +
                Scalar(3.64784832476320460504)) *
                   r +
               Scalar(5.7694972214606914055)) *
                  r +
              Scalar(4.6303378461565452959)) *
                 r +
             Scalar(1.42343711074968357734)) /
            (((((((Scalar(1.05075007164441684324e-9) * r +
                   Scalar(5.475938084995344946e-4)) *
                      r +
                  Scalar(0.0151986665636164571966)) *
                     r +
                 Scalar(0.14810397642748007459)) *
                    r +
                Scalar(0.68976733498510000455)) *
                   r +
               Scalar(1.6763848301838038494)) *
                  r +
              Scalar(2.05319162663775882187)) *
                 r +
             Scalar(1));
  } else {
    r -= Scalar(5);
    value = (((((((Scalar(2.01033439929228813265e-7) * r +
                   Scalar(2.71155556874348757815e-5)) *
                      r +
                  Scalar(0.0012426609473880784386)) *
                     r +
                 Scalar(0.026532189526576123093)) *
                    r +
                Scalar(0.29656057182850489123)) *
                   r +
               Scalar(1.7848265399172913358)) *
                  r +
              Scalar(5.4637849111641143699)) *
                 r +
             Scalar(6.6579046435011037772)) /
            (((((((Scalar(2.04426310338993978564e-15) * r +
                   Scalar(1.4215117583164458887e-7)) *
                      r +
                  Scalar(1.8463183175100546818e-5)) *
                     r +
                 Scalar(7.868691311456132591e-4)) *
                    r +
                Scalar(0.0148753612908506148525)) *
                   r +
               Scalar(0.13692988092273580531)) *
                  r +
              Scalar(0.59983220655588793769)) *
                 r +
             Scalar(1));
  }
  return (q < Scalar(0)) ? -value : value;
}

}  // namespace reliab
