#ifndef KSS_LINALG_HPP
#define KSS_LINALG_HPP

#include <optional>
#include <vector>

#include "kss/rat.hpp"

namespace kss {

// Exact rational vectors and matrices. Dimensions are small (ambient
// dimension of the coefficient simplex or of the cocharacter lattice), so
// plain dense Gaussian elimination over Rat is all we need.
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

Rat dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& t);
bool is_zero(const QVec& a);
QVec zero_vec(std::size_t n);

// Strict total order used everywhere a deterministic ordering is needed.
int lex_compare(const QVec& a, const QVec& b);

std::size_t rank(QMat m);

// Exact solution of a·x = b. Returns absent when the system is
// inconsistent; under-determined systems get free variables set to 0.
std::optional<QVec> solve_linear(const QMat& a, const QVec& b);

// Basis of {x : m·x = 0}, from the reduced row echelon form; deterministic.
QMat null_space(QMat m, std::size_t cols);

}  // namespace kss

#endif
