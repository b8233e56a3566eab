#include <algorithm>
#include <bit>

#include "hball/complex.hpp"

namespace hball {

using detail::Mask;

NotAShelling::NotAShelling(std::size_t step, const std::string& why)
    : std::invalid_argument("not a shelling at step " + std::to_string(step) + ": " + why), step_(step) {}

ShellingCertificate verify_shelling(const std::vector<Face>& order) {
  ShellingCertificate cert;
  if (order.empty()) return cert;
  const std::size_t d = order.front().size();
  SimplicialComplex all(order);  // only used for the label -> bit map
  std::vector<Mask> masks;
  masks.reserve(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (order[j].size() != d) throw NotAShelling(j + 1, "facet sizes differ");
    masks.push_back(all.mask_of(order[j]));
  }

  std::vector<Mask> meets;
  for (std::size_t j = 0; j < masks.size(); ++j) {
    const Mask f = masks[j];
    meets.clear();
    for (std::size_t i = 0; i < j; ++i) {
      if (masks[i] == f) throw NotAShelling(j + 1, "facet repeated");
      meets.push_back(masks[i] & f);
    }
    std::sort(meets.begin(), meets.end());
    meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
    auto seen = [&](Mask g) {
      return std::any_of(meets.begin(), meets.end(), [g](Mask m) { return (g & m) == g; });
    };

    Mask r = 0;
    if (j > 0) {
      for (Mask rest = f; rest; rest &= rest - 1) {
        Mask v = rest & -rest;
        if (seen(f & ~v)) r |= v;
      }
    }
    // New faces of step j must be exactly the interval [r, f].
    Mask s = f;
    while (true) {
      bool fresh = (j == 0) || !seen(s);
      if (fresh != ((s & r) == r)) throw NotAShelling(j + 1, "new faces do not form an interval");
      if (s == 0) break;
      s = (s - 1) & f;
    }
    cert.order.push_back(order[j]);
    cert.restrictions.push_back(all.face_of(r));
  }
  return cert;
}

bool certificate_matches(const ShellingCertificate& predicted) {
  try {
    return verify_shelling(predicted.order).restrictions == predicted.restrictions;
  } catch (const NotAShelling&) {
    return false;
  }
}

CountVector h_from_certificate(const ShellingCertificate& cert) {
  if (cert.order.empty()) throw std::invalid_argument("empty certificate");
  const std::size_t d = cert.order.front().size();
  std::vector<Count> h(d + 1, 0);
  for (const Face& r : cert.restrictions) ++h.at(r.size());
  return CountVector{Role::h, static_cast<int>(d), std::move(h)};
}

}  // namespace hball
