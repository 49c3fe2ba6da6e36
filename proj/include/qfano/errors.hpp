#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qfano {

// Thrown when two routes that must agree do not (closed form vs simulation,
// a bound falling below the exact entropy, an inner product with a large
// imaginary residue). Distinct from invalid_argument: the inputs were fine,
// the computation contradicted itself.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// Real part of a quantity that must be real. Imaginary residue above tol
// signals a broken Hermiticity assumption upstream.
double real_checked(std::complex<double> z, double tol = 1e-10);

}  // namespace qfano
