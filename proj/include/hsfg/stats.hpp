#pragma once

#include <cmath>
#include <stdexcept>

namespace hsfg {

inline double normal_pdf(double z) {
	return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace detail {

// Regularized incomplete gamma functions, series + continued fraction.
inline double gamma_p_series(double a, double x) {
	double ap = a, sum = 1.0 / a, del = sum;
	for (int i = 0; i < 500; ++i) {
		ap += 1.0;
		del *= x / ap;
		sum += del;
		if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
	}
	return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_q_contfrac(double a, double x) {
	const double tiny = 1e-300;
	double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
	for (int i = 1; i <= 500; ++i) {
		double an = -i * (i - a);
		b += 2.0;
		d = an * d + b;
		if (std::fabs(d) < tiny) d = tiny;
		c = b + an / c;
		if (std::fabs(c) < tiny) c = tiny;
		d = 1.0 / d;
		double del = d * c;
		h *= del;
		if (std::fabs(del - 1.0) < 1e-15) break;
	}
	return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace detail

// Q(a, x) = upper regularized incomplete gamma.
inline double regularized_gamma_q(double a, double x) {
	if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q domain");
	if (x == 0.0) return 1.0;
	if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
	return detail::gamma_q_contfrac(a, x);
}

inline double chi_square_pvalue(double stat, int df) {
	if (df < 1) throw std::invalid_argument("chi-square needs df >= 1");
	return regularized_gamma_q(0.5 * df, 0.5 * stat);
}

inline double binomial_log_pmf(long long n, long long k, double p) {
	if (k < 0 || k > n) return -INFINITY;
	if (p <= 0.0) return k == 0 ? 0.0 : -INFINITY;
	if (p >= 1.0) return k == n ? 0.0 : -INFINITY;
	double lc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
	return lc + k * std::log(p) + (n - k) * std::log1p(-p);
}

inline double binomial_pmf(long long n, long long k, double p) {
	return std::exp(binomial_log_pmf(n, k, p));
}

}  // namespace hsfg
