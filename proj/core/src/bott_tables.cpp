#include "samelson/bott_tables.hpp"

#include <stdexcept>

namespace samelson {

std::string to_string(KspGroup group) {
    switch (group) {
        case KspGroup::Z: return "Z";
        case KspGroup::Z2: return "Z/2";
        case KspGroup::Zero: return "0";
    }
    throw std::logic_error("to_string: bad KspGroup");
}

KspGroup ksp_minus2_of_sphere(long q) {
    if (q < 1) throw std::invalid_argument("ksp_minus2_of_sphere: q must be >= 1");
    switch (q % 4) {
        case 2: return KspGroup::Z;
        case 1: return KspGroup::Zero;
        case 0: {
            long r = q / 4;
            return (r % 2 == 0) ? KspGroup::Z2 : KspGroup::Zero;
        }
        default: {  // q = 4r - 1
            long r = (q + 1) / 4;
            return (r % 2 == 0) ? KspGroup::Zero : KspGroup::Z2;
        }
    }
}

int complexification_sigma(long j) {
    if (j < 1) throw std::invalid_argument("complexification_sigma: j must be >= 1");
    return (j % 2 == 0) ? 1 : 2;
}

}  // namespace samelson
