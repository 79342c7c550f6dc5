#include "vectdeform/linalg.hpp"

#include <map>
#include <numeric>

namespace vectdeform {

namespace {

struct DisjointSets {
	explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	std::size_t find(std::size_t x)
	{
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	}
	void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
	std::vector<std::size_t> parent;
};

GaussianRational exact_quotient(const GaussianRational& num, const GaussianRational& den)
{
	GaussianRational q = num / den;
	if (!q.is_gaussian_integer())
		throw Error("Bareiss elimination produced a non-integral quotient");
	return q;
}

// Solves one connected component in place. Returns false if inconsistent.
bool solve_component(std::vector<std::vector<GaussianRational>> m, const std::vector<std::size_t>& cols,
                     std::vector<GaussianRational>& solution, std::size_t& rank)
{
	const std::size_t nrows = m.size();
	const std::size_t ncols = cols.size();

	for (auto& row : m) {
		Integer l = 1;
		for (const auto& v : row)
			mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator_lcm().get_mpz_t());
		if (l != 1)
			for (auto& v : row)
				v *= GaussianRational(Rational(l));
	}

	GaussianRational prev(1);
	std::vector<std::pair<std::size_t, std::size_t>> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
		std::size_t p = r;
		while (p < nrows && m[p][c].is_zero())
			++p;
		if (p == nrows)
			continue;
		std::swap(m[p], m[r]);
		const GaussianRational pivot = m[r][c];
		for (std::size_t i = r + 1; i < nrows; ++i) {
			const GaussianRational factor = m[i][c];
			for (std::size_t j = c + 1; j <= ncols; ++j) {
				GaussianRational v = pivot * m[i][j];
				if (!factor.is_zero())
					v -= factor * m[r][j];
				m[i][j] = exact_quotient(v, prev);
			}
			m[i][c] = GaussianRational{};
		}
		prev = pivot;
		pivots.emplace_back(r, c);
		++r;
	}
	rank += pivots.size();

	for (std::size_t i = r; i < nrows; ++i)
		if (!m[i][ncols].is_zero())
			return false;

	std::vector<GaussianRational> local(ncols);
	for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
		auto [row, col] = *it;
		GaussianRational acc = m[row][ncols];
		for (std::size_t j = col + 1; j < ncols; ++j)
			if (!m[row][j].is_zero() && !local[j].is_zero())
				acc -= m[row][j] * local[j];
		local[col] = acc / m[row][col];
	}
	for (std::size_t j = 0; j < ncols; ++j)
		solution[cols[j]] = local[j];
	return true;
}

} // namespace

LinearSolveResult solve_exact(const std::vector<SparseRow>& rows, std::size_t unknowns)
{
	LinearSolveResult result;
	result.rows = rows.size();
	result.unknowns = unknowns;

	DisjointSets sets(unknowns);
	for (const auto& row : rows) {
		for (const auto& [col, v] : row.entries) {
			if (col >= unknowns)
				throw Error("solve_exact: column index out of range");
			sets.unite(col, row.entries.front().first);
		}
	}

	bool consistent = true;
	std::map<std::size_t, std::vector<const SparseRow*>> component_rows;
	for (const auto& row : rows) {
		bool empty = true;
		for (const auto& [col, v] : row.entries)
			if (!v.is_zero())
				empty = false;
		if (empty) {
			if (!row.rhs.is_zero())
				consistent = false;
			continue;
		}
		component_rows[sets.find(row.entries.front().first)].push_back(&row);
	}

	std::map<std::size_t, std::vector<std::size_t>> component_cols;
	for (std::size_t c = 0; c < unknowns; ++c)
		component_cols[sets.find(c)].push_back(c);

	std::vector<GaussianRational> solution(unknowns);
	for (const auto& [root, crow] : component_rows) {
		const auto& cols = component_cols[root];
		std::map<std::size_t, std::size_t> local_index;
		for (std::size_t j = 0; j < cols.size(); ++j)
			local_index[cols[j]] = j;
		std::vector<std::vector<GaussianRational>> dense(crow.size(),
		                                                 std::vector<GaussianRational>(cols.size() + 1));
		for (std::size_t i = 0; i < crow.size(); ++i) {
			for (const auto& [col, v] : crow[i]->entries)
				dense[i][local_index[col]] += v;
			dense[i][cols.size()] = crow[i]->rhs;
		}
		if (!solve_component(std::move(dense), cols, solution, result.rank))
			consistent = false;
	}

	result.consistent = consistent;
	if (consistent)
		result.solution = std::move(solution);
	return result;
}

} // namespace vectdeform
