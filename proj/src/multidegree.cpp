#include "kapdeg/multidegree.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace kapdeg {

namespace {

std::mutex memo_mutex;
std::map<std::vector<int>, BigUint> memo;
std::size_t memo_limit = [] {
    if (const char* env = std::getenv("KAPDEG_MEMO_MAX")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(0);
}();

BigUint multidegree_rec(const Composition& k) {
    if (k.length() == 0) return BigUint(1);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(k.parts());
        if (it != memo.end()) return it->second;
    }
    RightmostZero rz = rightmost_zero(k);
    BigUint total;
    int from = rz.is_c ? 1 : rz.index + 1;
    // every j past the rightmost zero has k_j >= 1
    for (int j = from; j <= k.length(); ++j)
        total += multidegree_rec(ktilde(k, j));
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        if (memo_limit == 0 || memo.size() < memo_limit)
            memo.emplace(k.parts(), total);
    }
    return total;
}

}  // namespace

void set_multidegree_memo_limit(std::size_t max_entries) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo_limit = max_entries;
}

BigUint multidegree(const Composition& k) {
    if (!k.is_weak_of_length())
        throw std::invalid_argument("multidegree needs a weak composition of n into n parts");
    return multidegree_rec(k);
}

BigUint total_degree(int n) {
    if (n < 0) throw std::invalid_argument("size must be nonnegative");
    BigUint total;
    for_each_composition(n, [&](const Composition& k) { total += multidegree(k); });
    return total;
}

bool is_support(const Composition& k) {
    if (!k.is_weak_of_length())
        throw std::invalid_argument("support test needs a weak composition of n into n parts");
    int n = k.length();
    int suffix = 0;
    for (int i = 1; i <= n; ++i) {
        suffix += k.part(n - i + 1);
        if (suffix < i) return false;
    }
    return true;
}

}  // namespace kapdeg
