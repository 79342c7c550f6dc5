#pragma once

#include <cstddef>
#include <vector>

#include "vectdeform/scalars.hpp"

namespace vectdeform {

/// Sparse row of a linear system: (column, value) pairs.
struct SparseRow {
	std::vector<std::pair<std::size_t, GaussianRational>> entries;
	GaussianRational rhs;
};

struct LinearSolveResult {
	bool consistent = false;
	std::size_t rank = 0;
	std::size_t rows = 0;
	std::size_t unknowns = 0;
	/// One particular solution (free unknowns set to zero); empty when the
	/// system is inconsistent.
	std::vector<GaussianRational> solution;
};

/// Solves A x = b exactly over Q(i).
///
/// The system is split into connected components (rows sharing unknowns);
/// each component is scaled to Gaussian-integer entries and reduced with
/// fraction-free Bareiss elimination, so every intermediate entry is a minor
/// of the scaled matrix and divisions are exact. Inconsistency is decided by
/// exact rank comparison of the coefficient and augmented matrices.
LinearSolveResult solve_exact(const std::vector<SparseRow>& rows, std::size_t unknowns);

} // namespace vectdeform
