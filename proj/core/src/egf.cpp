#include "bellhopf/egf.hpp"

namespace bellhopf {

EGFSeries bell_egf(unsigned order) {
  // exp(e^x - 1): the connected part has exactly one structure of each size.
  std::vector<Rational> connected(order + 1, Rational(1));
  connected[0] = 0;
  return egf_exp(EGFSeries(std::move(connected)));
}

}  // namespace bellhopf
