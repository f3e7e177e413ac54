#include "hodgeint/json_io.hpp"

namespace hodgeint {

Json json_of(const Rational& x) { return to_string(x); }

Json json_of(const Integer& x) { return x.get_str(); }

Json json_of(const GaussianRational& x) {
  Json j;
  j["re"] = to_string(x.re);
  j["im"] = to_string(x.im);
  return j;
}

namespace {

template <class R>
Json laurent_json(const LaurentPoly<R>& p) {
  Json j = Json::object();
  for (auto& [e, c] : p.terms) j[std::to_string(e)] = json_of(c);
  return j;
}

template <class R>
Json series_json(const Series<R>& s) {
  Json j;
  j["valuation"] = s.val;
  j["order"] = s.order;
  Json coeffs = Json::array();
  for (auto& c : s.c) coeffs.push_back(json_of(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

template <class F>
Json ratfun_json(const RationalFunctionT<F>& f) {
  Json j;
  j["num"] = laurent_json(f.num);
  j["den"] = laurent_json(f.den);
  return j;
}

}  // namespace

Json json_of(const LaurentPoly<Rational>& p) { return laurent_json(p); }
Json json_of(const TauPoly& p) { return laurent_json(p); }
Json json_of(const Series<GaussianRational>& s) { return series_json(s); }
Json json_of(const TauSeries& s) { return series_json(s); }
Json json_of(const RationalFunction& f) { return ratfun_json(f); }
Json json_of(const TauRatFun& f) { return ratfun_json(f); }

Json json_of(const Partition& p) {
  Json j = Json::array();
  for (long part : p.parts) j.push_back(part);
  return j;
}

Json json_of(const PPolynomial& p) {
  Json j = Json::object();
  for (auto& [mu, c] : p.terms) j[mu.to_string()] = to_string(c);
  return j;
}

Json json_of(const ExpSum& e) {
  Json j = Json::object();
  for (auto& [f, a] : e.terms) j[std::to_string(f)] = to_string(a);
  return j;
}

Json json_of(const CJMatrix& m) {
  Json j;
  j["d"] = m.d;
  Json basis = Json::array();
  for (auto& p : m.basis) basis.push_back(json_of(p));
  j["basis"] = std::move(basis);
  Json entries = Json::array();
  for (auto& row : m.entries) {
    Json r = Json::array();
    for (auto& c : row) r.push_back(to_string(c));
    entries.push_back(std::move(r));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace hodgeint
