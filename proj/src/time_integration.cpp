#include "esdg/time_integration.hpp"

namespace esdg {

SspScheme scheme_for_degree(int k) { return k <= 1 ? SspScheme::rk2 : SspScheme::rk3; }

}  // namespace esdg
