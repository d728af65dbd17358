#pragma once

// phi(t) = Leb([min C, t] n C) / Leb(C) and its coordinatewise extensions
// C_alpha -> S_alpha, glued blockwise at limit levels with w fixed.

#include "transdim/cantor.hpp"
#include "transdim/lipschitz.hpp"
#include "transdim/smirnov.hpp"

#include <vector>

namespace transdim {

// Throws DomainError when t is not in c.
Rational phi(const CantorSet& c, const Rational& t);
// Least t in c with phi(t) = y, for y in [0, 1].
Rational phi_inverse(const CantorSet& c, const Rational& y);

// max{2, Leb(C)^-1}.
Rational phi_claimed_bound(const CantorSet& c);

// phi on c with the Euclidean metric, over all pairs of interval endpoints.
LipschitzReport phi_endpoint_report(const CantorSet& c);

struct PhiMap {
  Ordinal alpha;
  TruncatedSpace target;
  std::vector<SmirnovPoint> source;  // points of the C_alpha truncation
  std::vector<SmirnovPoint> image;   // image[i] = phi_alpha(source[i])
  bool covers_target = false;        // every target lattice point is an image
};

// Sampled graph of phi_alpha: preimages of every point of the S_alpha
// truncation, plus the interval endpoints of c when alpha = 1. Supports the
// same alpha as truncate_smirnov.
PhiMap build_phi_alpha(const Ordinal& alpha, const CantorSet& c, const TruncationOptions& options = {});

// Lipschitz estimate of phi_alpha with rho_alpha on both sides.
LipschitzReport phi_alpha_report(const PhiMap& m, const CantorSet& c);

}  // namespace transdim
