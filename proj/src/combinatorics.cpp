#include "lipwalk/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace lipwalk {

BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;  // exact at every step: C(a-b+i, i) is an integer
    }
    return result;
}

void TrinomialTable::ensure_rows(int n) {
    if (n < 0) return;
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (static_cast<int>(rows_.size()) <= n) {
        const auto& prev = rows_.back();
        const int m = static_cast<int>(rows_.size());  // building row m
        std::vector<BigInt> row(2 * m + 1);
        auto at = [&prev](int k) -> BigInt {
            if (k < 0 || k >= static_cast<int>(prev.size())) return 0;
            return prev[k];
        };
        for (int k = 0; k <= 2 * m; ++k) row[k] = at(k) + at(k - 1) + at(k - 2);
        rows_.push_back(std::move(row));
    }
}

BigInt TrinomialTable::t_star(int n, int k) const {
    if (n < 0 || k < 0 || k > 2 * n) return 0;
    if (n >= rows()) throw std::out_of_range("TrinomialTable: row not built");
    return rows_[n][k];
}

void MotzkinTable::ensure_rows(int n) {
    if (n < 0) return;
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (static_cast<int>(rows_.size()) <= n) {
        const auto& prev = rows_.back();
        const int m = static_cast<int>(rows_.size());
        std::vector<BigInt> row(m + 1);
        auto at = [&prev](int k) -> BigInt {
            if (k < 0 || k >= static_cast<int>(prev.size())) return 0;
            return prev[k];
        };
        for (int k = 0; k <= m; ++k) row[k] = at(k) + at(k - 1) + at(k + 1);
        rows_.push_back(std::move(row));
    }
}

BigInt MotzkinTable::motzkin(int n, int k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n >= static_cast<int>(rows_.size()))
        throw std::out_of_range("MotzkinTable: row not built");
    return rows_[n][k];
}

namespace {

std::mutex table_mutex;
TrinomialTable shared_trinomial;
MotzkinTable shared_motzkin;

}  // namespace

BigInt trinomial(int n, int k) {
    if (n < 0) return 0;
    std::lock_guard lock(table_mutex);
    shared_trinomial.ensure_rows(n);
    return shared_trinomial.trinomial(n, k);
}

BigInt irregular_trinomial(int n, int k) {
    if (n < 0) return 0;
    std::lock_guard lock(table_mutex);
    shared_trinomial.ensure_rows(n);
    return shared_trinomial.t_star(n, k);
}

BigInt central_trinomial(int n) {
    if (n < 0) return 0;
    std::lock_guard lock(table_mutex);
    shared_trinomial.ensure_rows(n);
    return shared_trinomial.central(n);
}

BigInt motzkin(int n, int k) {
    if (n < 0) return 0;
    std::lock_guard lock(table_mutex);
    shared_motzkin.ensure_rows(n);
    return shared_motzkin.motzkin(n, k);
}

ExactRational path_endpoint_probability(int n, long long k) {
    if (n < 1) throw std::invalid_argument("path_endpoint_probability: n must be >= 1");
    if (k < 0) k = -k;  // the walk is step-symmetric
    const long long steps = n - 1;
    if (k > steps) return ExactRational(0);
    BigInt ways = 0;
    for (long long i = 0; 2 * i <= steps - k; ++i)
        ways += binomial(steps, k + i) * binomial(steps - k - i, i);
    return ExactRational(ways, big_pow(3, static_cast<unsigned>(steps)));
}

}  // namespace lipwalk
