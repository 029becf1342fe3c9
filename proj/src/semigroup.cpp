#include "mohpoly/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace mohpoly {

NumericalSemigroup::NumericalSemigroup(std::vector<long> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw Error("no generators");
    for (long g : generators_) {
        if (g <= 0) throw Error("generators must be positive");
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    long g = 0;
    for (long v : generators_) g = std::gcd(g, v);
    if (g != 1) throw Error("generators are not coprime: gcd = " + std::to_string(g));
}

bool NumericalSemigroup::contains(long r) const {
    if (r < 0) return false;
    if (r == 0) return true;
    // small values only; a simple reachability table suffices
    std::vector<char> reachable(static_cast<std::size_t>(r) + 1, 0);
    reachable[0] = 1;
    for (long v = 1; v <= r; ++v) {
        for (long g : generators_) {
            if (g <= v && reachable[v - g]) {
                reachable[v] = 1;
                break;
            }
        }
    }
    return reachable[r] != 0;
}

namespace {

void enumerate(const std::vector<long>& weights, std::size_t index, long remaining,
               std::vector<unsigned>& current, std::vector<std::vector<unsigned>>& out) {
    if (index + 1 == weights.size()) {
        if (remaining % weights[index] == 0) {
            current[index] = static_cast<unsigned>(remaining / weights[index]);
            out.push_back(current);
        }
        return;
    }
    long g = weights[index];
    for (long k = 0; k * g <= remaining; ++k) {
        current[index] = static_cast<unsigned>(k);
        enumerate(weights, index + 1, remaining - k * g, current, out);
    }
    current[index] = 0;
}

}  // namespace

std::vector<std::vector<unsigned>> weighted_factorizations(const std::vector<long>& weights, long r) {
    if (r < 0) throw Error("factorizations of a negative integer");
    for (long w : weights) {
        if (w <= 0) throw Error("weights must be positive");
    }
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current(weights.size(), 0);
    enumerate(weights, 0, r, current, out);
    return out;  // recursion order is lexicographic on alpha
}

std::vector<std::vector<unsigned>> NumericalSemigroup::factorizations(long r) const {
    return weighted_factorizations(generators_, r);
}

long NumericalSemigroup::frobenius() const {
    if (generators_.front() == 1) throw NoGaps("semigroup has no gaps");
    // Apery set via shortest paths on residues modulo the smallest generator
    long n = generators_.front();
    const long kUnset = -1;
    std::vector<long> apery(n, kUnset);
    apery[0] = 0;
    using Entry = std::pair<long, long>;  // (value, residue)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [value, residue] = queue.top();
        queue.pop();
        if (apery[residue] != kUnset && apery[residue] < value) continue;
        for (long g : generators_) {
            long next = value + g;
            long res = next % n;
            if (apery[res] == kUnset || next < apery[res]) {
                apery[res] = next;
                queue.emplace(next, res);
            }
        }
    }
    long max_apery = *std::max_element(apery.begin(), apery.end());
    return max_apery - n;
}

}  // namespace mohpoly
