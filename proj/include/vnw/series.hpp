#pragma once

#include <map>
#include <string>
#include <vector>

#include "vnw/scalar.hpp"

namespace vnw::series {

/// Multidegree (v_1, v_2, ...) with trailing zeros trimmed.
using Multidegree = std::vector<int>;

int weighted_degree(const Multidegree& v);  // sum j * v_j
int vertex_total(const Multidegree& v);     // sum v_j
Multidegree trimmed(Multidegree v);

/// Multivariate polynomial in t_1, t_2, ... with deg t_j = j, truncated at a
/// weighted degree; exact Scalar coefficients. Zero coefficients are not
/// stored.
struct TruncatedSeries {
  int max_weighted_degree = 0;
  std::map<Multidegree, Scalar> terms;

  Scalar coeff(const Multidegree& v) const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

TruncatedSeries series_zero(int w);
TruncatedSeries series_one(int w);
void add_term(TruncatedSeries& s, const Multidegree& v, const Scalar& c);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(TruncatedSeries a, const Scalar& c);

/// Formal log via sum (-1)^{m+1} (s-1)^m / m; requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& s);

/// Formal exp of a series with zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& s);

/// t_j -> beta * t_j, i.e. each term gains beta^{sum v_j}.
TruncatedSeries substitute_scaled(const TruncatedSeries& s, const Scalar& beta);

/// Enumerates every multidegree with weighted degree <= w (including the
/// empty one), in lexicographic order.
std::vector<Multidegree> multidegrees_up_to(int w);

std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

std::string monomial_string(const Multidegree& v);  // "t1^2 t3"

}  // namespace vnw::series
