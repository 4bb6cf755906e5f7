#ifndef QENS_ERROR_HPP
#define QENS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qens {

// Precondition on an argument violated (negative mass, empty range, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Inputs are valid but lie outside the regime a model is defined for,
// e.g. an ensemble density requested where E_T <= V.
class unsupported_regime : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sampling grid too coarse for the requested spectrum.
class resolution_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Iterative scheme failed to reach its tolerance.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Square-well member with cos(k1 x0) == 0.
class singular_member : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool cond, const std::string& what) {
    if (!cond) throw domain_error(what);
}
}  // namespace detail

}  // namespace qens

#endif
