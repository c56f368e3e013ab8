#include "vnw/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vnw::series {

int weighted_degree(const Multidegree& v) {
  int w = 0;
  for (size_t j = 0; j < v.size(); ++j) w += static_cast<int>(j + 1) * v[j];
  return w;
}

int vertex_total(const Multidegree& v) {
  int t = 0;
  for (int x : v) t += x;
  return t;
}

Multidegree trimmed(Multidegree v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Scalar TruncatedSeries::coeff(const Multidegree& v) const {
  auto it = terms.find(trimmed(v));
  return it == terms.end() ? Scalar(0) : it->second;
}

TruncatedSeries series_zero(int w) { return TruncatedSeries{w, {}}; }

TruncatedSeries series_one(int w) {
  TruncatedSeries s{w, {}};
  s.terms[{}] = Scalar(1);
  return s;
}

void add_term(TruncatedSeries& s, const Multidegree& v, const Scalar& c) {
  if (c.is_zero()) return;
  Multidegree key = trimmed(v);
  if (weighted_degree(key) > s.max_weighted_degree) return;
  auto [it, inserted] = s.terms.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.terms.erase(it);
  }
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  out.max_weighted_degree = std::min(a.max_weighted_degree, b.max_weighted_degree);
  std::erase_if(out.terms, [&](const auto& t) {
    return weighted_degree(t.first) > out.max_weighted_degree;
  });
  for (auto& [v, c] : b.terms) add_term(out, v, c);
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, scale(b, Scalar(-1)));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = series_zero(std::min(a.max_weighted_degree, b.max_weighted_degree));
  for (auto& [va, ca] : a.terms) {
    int wa = weighted_degree(va);
    if (wa > out.max_weighted_degree) continue;
    for (auto& [vb, cb] : b.terms) {
      if (wa + weighted_degree(vb) > out.max_weighted_degree) continue;
      Multidegree v(std::max(va.size(), vb.size()), 0);
      for (size_t j = 0; j < va.size(); ++j) v[j] += va[j];
      for (size_t j = 0; j < vb.size(); ++j) v[j] += vb[j];
      add_term(out, v, ca * cb);
    }
  }
  return out;
}

TruncatedSeries scale(TruncatedSeries a, const Scalar& c) {
  if (c.is_zero()) return series_zero(a.max_weighted_degree);
  for (auto& [v, x] : a.terms) x *= c;
  return a;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
  if (s.coeff({}) != Scalar(1))
    throw std::domain_error("series_log requires constant term 1");
  TruncatedSeries u = s;
  u.terms.erase(Multidegree{});  // u = s - 1, weighted degree >= 1
  TruncatedSeries out = series_zero(s.max_weighted_degree);
  TruncatedSeries power = series_one(s.max_weighted_degree);
  for (int m = 1; m <= s.max_weighted_degree; ++m) {
    power = mul(power, u);
    Scalar c(Rational(((m + 1) % 2) ? -1 : 1, m));
    for (auto& [v, x] : power.terms) add_term(out, v, x * c);
  }
  return out;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (!s.coeff({}).is_zero())
    throw std::domain_error("series_exp requires zero constant term");
  TruncatedSeries out = series_one(s.max_weighted_degree);
  TruncatedSeries power = series_one(s.max_weighted_degree);
  Rational mfact(1);
  for (int m = 1; m <= s.max_weighted_degree; ++m) {
    power = mul(power, s);
    if (power.terms.empty()) break;
    mfact *= m;
    Scalar c(Rational(1) / mfact);
    for (auto& [v, x] : power.terms) add_term(out, v, x * c);
  }
  return out;
}

TruncatedSeries substitute_scaled(const TruncatedSeries& s, const Scalar& beta) {
  TruncatedSeries out = series_zero(s.max_weighted_degree);
  for (auto& [v, c] : s.terms) add_term(out, v, c * scalar_pow(beta, vertex_total(v)));
  return out;
}

std::vector<Multidegree> multidegrees_up_to(int w) {
  std::vector<Multidegree> out;
  Multidegree v;
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j > w) {
      out.push_back(trimmed(v));
      return;
    }
    for (int count = 0; count * j <= remaining; ++count) {
      v.resize(std::max<size_t>(v.size(), j), 0);
      v[j - 1] = count;
      self(self, j + 1, remaining - count * j);
    }
    v[j - 1] = 0;
  };
  rec(rec, 1, w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string monomial_string(const Multidegree& v) {
  if (v.empty()) return "1";
  std::string out;
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    if (!out.empty()) out += " ";
    out += "t" + std::to_string(j + 1);
    if (v[j] > 1) out += "^" + std::to_string(v[j]);
  }
  return out.empty() ? "1" : out;
}

std::string series_to_json(const TruncatedSeries& s) {
  nlohmann::json j;
  j["W"] = s.max_weighted_degree;
  auto terms = nlohmann::json::array();
  for (auto& [v, c] : s.terms) {
    nlohmann::json t;
    t["v"] = v;
    t["re"] = c.re.get_str();
    t["im"] = c.im.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2);
}

TruncatedSeries series_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  TruncatedSeries s = series_zero(j.at("W").get<int>());
  for (auto& t : j.at("terms")) {
    Multidegree v = t.at("v").get<Multidegree>();
    add_term(s, v,
             Scalar(parse_rational(t.at("re").get<std::string>()),
                    parse_rational(t.at("im").get<std::string>())));
  }
  return s;
}

}  // namespace vnw::series
