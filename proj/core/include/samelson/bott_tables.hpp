#pragma once

#include <string>

namespace samelson {

/// Isomorphism type of the reduced symplectic K-group KSp^{-2}(S^q).
enum class KspGroup { Z, Z2, Zero };

std::string to_string(KspGroup group);

/// KSp^{-2}(S^q) for q >= 1, case by case in q mod 4:
///
///   q = 4r+2 -> Z
///   q = 4r+1 -> 0
///   q = 4r   -> Z/2 if r even, 0 if r odd
///   q = 4r-1 -> 0   if r even, Z/2 if r odd
///
/// Bott periodicity makes this 8-periodic in q; the tests assert that rather
/// than the implementation assuming it.
KspGroup ksp_minus2_of_sphere(long q);

/// Scale factor of complexification KSp^{-2}(S^{4j+2}) -> K^{-2}(S^{4j+2}) on
/// generators: 1 when j is even, 2 when j is odd. Requires j >= 1.
int complexification_sigma(long j);

}  // namespace samelson
