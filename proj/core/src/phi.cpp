#include "transdim/phi.hpp"

#include "transdim/errors.hpp"

#include <set>

namespace transdim {
namespace {

SmirnovPoint map_coords(const SmirnovPoint& p, const auto& f) {
  SmirnovPoint out = p;
  for (AddressStep& s : out.path) {
    if (s.kind == AddressStep::Kind::Coord) s.t = f(s.t);
  }
  return out;
}

}  // namespace

Rational phi(const CantorSet& c, const Rational& t) { return c.measure_up_to(t) / c.total_measure(); }

Rational phi_inverse(const CantorSet& c, const Rational& y) {
  if (y < 0 || y > 1) throw DomainError("phi takes values in [0, 1], got " + to_string(y));
  return c.least_point_with_measure(y * c.total_measure());
}

Rational phi_claimed_bound(const CantorSet& c) {
  Rational inv = 1 / c.total_measure();
  return inv > 2 ? inv : Rational(2);
}

LipschitzReport phi_endpoint_report(const CantorSet& c) {
  const std::vector<Rational> src = c.endpoints();
  std::vector<Rational> img;
  img.reserve(src.size());
  for (const Rational& t : src) img.push_back(phi(c, t));
  auto euclid = [](const Rational& a, const Rational& b) { return a < b ? Rational(b - a) : Rational(a - b); };
  return lipschitz_estimate<Rational>(src, img, euclid, euclid, phi_claimed_bound(c));
}

PhiMap build_phi_alpha(const Ordinal& alpha, const CantorSet& c, const TruncationOptions& options) {
  PhiMap m;
  m.alpha = alpha;
  m.target = truncate_smirnov(alpha, options);
  std::set<std::string> seen;
  auto push = [&](SmirnovPoint src) {
    if (!seen.insert(src.to_string()).second) return;
    m.image.push_back(map_coords(src, [&](const Rational& t) { return phi(c, t); }));
    m.source.push_back(std::move(src));
  };
  for (const SmirnovPoint& p : m.target.points()) {
    push(map_coords(p, [&](const Rational& y) { return phi_inverse(c, y); }));
  }
  if (alpha == Ordinal::finite(1)) {
    for (const Rational& e : c.endpoints()) push(SmirnovPoint{{AddressStep::coord(e)}});
  }
  std::set<std::string> images;
  for (const SmirnovPoint& p : m.image) images.insert(p.to_string());
  m.covers_target = true;
  for (const SmirnovPoint& p : m.target.points()) m.covers_target = m.covers_target && images.contains(p.to_string());
  return m;
}

LipschitzReport phi_alpha_report(const PhiMap& m, const CantorSet& c) {
  const Ordinal& a = m.alpha;
  const MetricVariant v = m.target.options().variant;
  auto rho = [&](const SmirnovPoint& p, const SmirnovPoint& q) { return smirnov_dist(a, p, q, v); };
  return lipschitz_estimate<SmirnovPoint>(m.source, m.image, rho, rho, phi_claimed_bound(c));
}

}  // namespace transdim
