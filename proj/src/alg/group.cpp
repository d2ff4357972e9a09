#include "steinfix/alg/group.hpp"

#include <algorithm>
#include <set>

namespace steinfix::alg {

int GroupTable::multiply(int a, int b) const {
    RingMatrix prod = elements_[a] * elements_[b];
    auto it = index_.find(prod.key());
    if (it == index_.end())
        throw NumericalFailure("group table is not closed under multiplication");
    return it->second;
}

int GroupTable::inverse(int a) const {
    if (inverse_cache_.empty()) inverse_cache_.assign(elements_.size(), -1);
    if (inverse_cache_[a] >= 0) return inverse_cache_[a];
    // Finite order: the power just before the identity reappears.
    int prev = a;
    if (a != 0) {
        int cur = multiply(a, a);
        while (cur != 0) {
            prev = cur;
            cur = multiply(cur, a);
        }
    }
    inverse_cache_[a] = prev;
    return prev;
}

int GroupTable::id_of(const RingMatrix& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> GroupTable::subgroup_closure(const std::vector<int>& seed_ids) const {
    std::set<int> seen = {0};
    std::vector<int> queue = {0};
    std::vector<int> gens = seed_ids;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (int g : gens) {
            int next = multiply(queue[q], g);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

bool GroupTable::is_subgroup(const std::vector<int>& ids) const {
    std::set<int> s(ids.begin(), ids.end());
    if (!s.count(0)) return false;
    for (int a : s)
        for (int b : s)
            if (!s.count(multiply(a, b))) return false;
    return true;
}

GroupTable bfs_closure(std::vector<GeneratorSpec> generators, std::size_t cap) {
    for (std::size_t i = 1; i < generators.size(); ++i)
        if (generators[i].matrix.size() != generators[0].matrix.size() ||
            generators[i].matrix.modulus() != generators[0].matrix.modulus() ||
            generators[i].matrix.vars() != generators[0].matrix.vars() ||
            generators[i].matrix.degree_cap() != generators[0].matrix.degree_cap())
            throw ParameterError("generators live in different matrix rings");
    std::stable_sort(generators.begin(), generators.end(),
                     [](const GeneratorSpec& a, const GeneratorSpec& b) {
                         return a.label < b.label;
                     });

    GroupTable t;
    t.generators_ = generators;
    if (generators.empty())
        throw ParameterError("closure requires at least one generator");

    const auto& g0 = generators[0].matrix;
    RingMatrix id = RingMatrix::identity(g0.size(), g0.modulus(), g0.vars(), g0.degree_cap());
    t.elements_.push_back(id);
    t.index_[id.key()] = 0;
    t.words_.push_back({});
    t.parents_.push_back(-1);
    t.last_gen_.push_back(-1);

    std::size_t level_begin = 0;
    std::size_t frontier_size = 1;
    while (level_begin < t.elements_.size()) {
        std::size_t level_end = t.elements_.size();
        frontier_size = level_end - level_begin;
        for (std::size_t cur = level_begin; cur < level_end; ++cur) {
            for (int g = 0; g < static_cast<int>(generators.size()); ++g) {
                RingMatrix prod = t.elements_[cur] * generators[g].matrix;
                std::string key = prod.key();
                if (t.index_.count(key)) continue;
                if (t.elements_.size() >= cap)
                    throw CapExceeded(
                        "closure exceeded cap of " + std::to_string(cap) +
                            " elements (last frontier size " +
                            std::to_string(frontier_size) + ")",
                        frontier_size);
                int nid = static_cast<int>(t.elements_.size());
                t.index_[key] = nid;
                t.elements_.push_back(std::move(prod));
                std::vector<int> w = t.words_[cur];
                w.push_back(g);
                t.words_.push_back(std::move(w));
                t.parents_.push_back(static_cast<int>(cur));
                t.last_gen_.push_back(g);
            }
        }
        level_begin = level_end;
    }

    t.generator_ids_.reserve(generators.size());
    for (const auto& gen : generators) {
        int gid = t.id_of(gen.matrix);
        if (gid < 0) throw NumericalFailure("generator missing from its own closure");
        t.generator_ids_.push_back(gid);
    }
    return t;
}

}  // namespace steinfix::alg
