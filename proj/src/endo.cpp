#include "retractkit/endo.hpp"

namespace retractkit {

bool is_injective(const CommEndo& phi) { return !jacobian(phi.x_image(), phi.y_image()).is_zero(); }

bool is_injective(const NCEndo& phi) { return !commutator(phi.x_image(), phi.y_image()).is_zero(); }

AnyEndo make_endo(const EndoSpec& spec) {
  if (spec.ring == RingTag::comm) return CommEndo(parse<CommPoly>(spec.x_image), parse<CommPoly>(spec.y_image));
  return NCEndo(parse<NCPoly>(spec.x_image), parse<NCPoly>(spec.y_image));
}

EndoSpec to_spec(const AnyEndo& phi) {
  return std::visit([](const auto& e) { return to_spec(e); }, phi);
}

AnyPoly apply(const AnyEndo& phi, const AnyPoly& p) {
  return std::visit(
      [&](const auto& e) -> AnyPoly {
        using P = typename std::decay_t<decltype(e)>::Poly;
        return e(as_ring<P>(p));
      },
      phi);
}

AnyEndo compose(const AnyEndo& sigma, const AnyEndo& tau) {
  return std::visit(
      [&](const auto& s) -> AnyEndo {
        using P = typename std::decay_t<decltype(s)>::Poly;
        return compose(s, as_ring<P>(tau));
      },
      sigma);
}

}  // namespace retractkit
