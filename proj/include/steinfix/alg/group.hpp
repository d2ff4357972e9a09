#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "steinfix/alg/matrix.hpp"

namespace steinfix::alg {

struct GeneratorSpec {
    RingMatrix matrix;
    std::string label;
};

/// Enumerated finite matrix group. Element 0 is the identity; discovery
/// order is breadth-first by word length, ties broken by generator label.
/// The table is immutable once built and safe to share across threads.
class GroupTable {
public:
    std::size_t size() const { return elements_.size(); }
    const RingMatrix& element(int id) const { return elements_[id]; }

    int generator_count() const { return static_cast<int>(generators_.size()); }
    const GeneratorSpec& generator(int g) const { return generators_[g]; }
    /// Element id of generator g (generators are ordered by label).
    int generator_element(int g) const { return generator_ids_[g]; }

    /// Id of the product a*b.
    int multiply(int a, int b) const;
    int inverse(int a) const;
    /// Id of a matrix in canonical form, or -1 if absent.
    int id_of(const RingMatrix& m) const;

    /// Generator word producing element id (indices into the generator list).
    const std::vector<int>& word(int id) const { return words_[id]; }
    /// BFS predecessor: word(id) = word(parent(id)) + [last_generator(id)].
    int parent(int id) const { return parents_[id]; }
    int last_generator(int id) const { return last_gen_[id]; }

    /// Multiplication closure of the span of the given element ids
    /// (sorted, always contains the identity).
    std::vector<int> subgroup_closure(const std::vector<int>& seed_ids) const;
    bool is_subgroup(const std::vector<int>& ids) const;

    friend GroupTable bfs_closure(std::vector<GeneratorSpec> generators, std::size_t cap);

private:
    std::vector<RingMatrix> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<GeneratorSpec> generators_;
    std::vector<int> generator_ids_;
    std::vector<std::vector<int>> words_;
    std::vector<int> parents_;
    std::vector<int> last_gen_;
    mutable std::vector<int> inverse_cache_;
};

/// Breadth-first closure of the generated group. Throws CapExceeded (with
/// the last frontier size) if more than cap elements are discovered.
/// Generators are sorted by label before the walk, so the result is
/// deterministic regardless of input order.
GroupTable bfs_closure(std::vector<GeneratorSpec> generators, std::size_t cap);

}  // namespace steinfix::alg
