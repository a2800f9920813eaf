#include "repzeta/counting.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace repzeta {

int MatrixSpaceKind::free_coordinates() const {
    switch (tag) {
        case Tag::Alt: return size * (size - 1) / 2;
        case Tag::Mat: return size * size;
        case Tag::Sym: return size * (size + 1) / 2;
    }
    return 0;
}

std::string MatrixSpaceKind::label() const {
    switch (tag) {
        case Tag::Alt: return "Alt(" + std::to_string(size) + ")";
        case Tag::Mat: return "Mat(" + std::to_string(size) + ")";
        case Tag::Sym: return "Sym(" + std::to_string(size) + ")";
    }
    return "?";
}

namespace {

Rat rat_qpow(long q, long e) {
    Int num = int_pow(Int(q), static_cast<unsigned long>(e < 0 ? -e : e));
    Rat r = e < 0 ? Rat(1, num) : Rat(num);
    r.canonicalize();
    return r;
}

Rat binom_eval(int a, int b, const Rat& x) {
    std::array<Rat, kNumVars> point;
    point.fill(Rat(0));
    point[static_cast<int>(Var::X)] = x;
    return gaussian_binomial(a, b, Var::X).eval_rat(point);
}

Rat poch_eval(Rat base, const Rat& step, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) {
        r *= Rat(1) - base;
        base *= step;
    }
    return r;
}

long long checked_power(long base, long exp, unsigned long long limit) {
    unsigned long long total = 1;
    for (long i = 0; i < exp; ++i) {
        total *= static_cast<unsigned long long>(base);
        if (total > limit) throw ResourceLimit("enumeration space exceeds the resource bound");
    }
    return static_cast<long long>(total);
}

// Chunked parallel accumulation over [0, total).
template <class Fn>
long long parallel_count(long long total, int jobs, Fn per_range) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || total < 4096) return per_range(0, total);
    std::vector<long long> partial(static_cast<size_t>(jobs), 0);
    std::vector<std::thread> workers;
    long long chunk = (total + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        long long lo = j * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, j, lo, hi] { partial[static_cast<size_t>(j)] = per_range(lo, hi); });
    }
    for (auto& w : workers) w.join();
    long long sum = 0;
    for (long long p : partial) sum += p;
    return sum;
}

// Arithmetic in F_q for q prime or q = 4 (GF(4) via x^2 = x + 1).
class GaloisField {
public:
    explicit GaloisField(int q) : q_(q) {
        if (q == 4) return;
        bool prime = q >= 2;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime) throw DomainError("rank enumeration supports prime q and q = 4");
    }

    int q() const { return q_; }

    int add(int a, int b) const { return q_ == 4 ? (a ^ b) : (a + b) % q_; }
    int neg(int a) const { return q_ == 4 ? a : (q_ - a) % q_; }

    int mul(int a, int b) const {
        if (q_ != 4) return (a * b) % q_;
        if (a == 0 || b == 0) return 0;
        if (a == 1) return b;
        if (b == 1) return a;
        // {2,3} are the two roots of x^2 + x + 1
        if (a == b) return a == 2 ? 3 : 2;
        return 1;
    }

    int inv(int a) const {
        ensure(a != 0, "zero is not invertible");
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) return b;
        throw std::logic_error("field inverse not found");
    }

private:
    int q_;
};

int gf_rank(const GaloisField& F, std::vector<int>& m, int rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r) * cols + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < cols; ++c)
            std::swap(m[static_cast<size_t>(pivot) * cols + c],
                      m[static_cast<size_t>(rank) * cols + c]);
        int pinv = F.inv(m[static_cast<size_t>(rank) * cols + col]);
        for (int r = rank + 1; r < rows; ++r) {
            int factor = F.mul(m[static_cast<size_t>(r) * cols + col], pinv);
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c) {
                int sub = F.mul(factor, m[static_cast<size_t>(rank) * cols + c]);
                m[static_cast<size_t>(r) * cols + c] =
                    F.add(m[static_cast<size_t>(r) * cols + c], F.neg(sub));
            }
        }
        ++rank;
    }
    return rank;
}

void fill_space_matrix(const MatrixSpaceKind& space, const std::vector<int>& digits,
                       const GaloisField& F, std::vector<int>& m) {
    const int s = space.size;
    std::fill(m.begin(), m.end(), 0);
    size_t k = 0;
    switch (space.tag) {
        case MatrixSpaceKind::Tag::Alt:
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j) {
                    int v = digits[k++];
                    m[static_cast<size_t>(i) * s + j] = v;
                    m[static_cast<size_t>(j) * s + i] = F.neg(v);
                }
            break;
        case MatrixSpaceKind::Tag::Mat:
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) m[static_cast<size_t>(i) * s + j] = digits[k++];
            break;
        case MatrixSpaceKind::Tag::Sym:
            for (int i = 0; i < s; ++i)
                for (int j = i; j < s; ++j) {
                    int v = digits[k++];
                    m[static_cast<size_t>(i) * s + j] = v;
                    m[static_cast<size_t>(j) * s + i] = v;
                }
            break;
    }
}

} // namespace

Int rank_count_closed(const MatrixSpaceKind& space, int corank_index, long q) {
    const int n = space.n(), i = corank_index;
    if (i < 0 || i > n) throw DomainError("corank index out of [n]_0");
    auto choose2 = [](long k) { return k * (k - 1) / 2; };
    Rat value;
    switch (space.tag) {
        case MatrixSpaceKind::Tag::Alt: {
            const int d = space.delta();
            value = binom_eval(n, i, rat_qpow(q, -2)) *
                    poch_eval(rat_qpow(q, -2 * (i + d) - 1), rat_qpow(q, -2), n - i) *
                    rat_qpow(q, choose2(2L * n + d) - choose2(2L * i + d));
            break;
        }
        case MatrixSpaceKind::Tag::Mat:
            value = binom_eval(n, i, rat_qpow(q, -1)) *
                    poch_eval(rat_qpow(q, -i - 1), rat_qpow(q, -1), n - i) *
                    rat_qpow(q, 1L * n * n - 1L * i * i);
            break;
        case MatrixSpaceKind::Tag::Sym:
            value = poch_eval(rat_qpow(q, -i - 1), rat_qpow(q, -1), n - i) /
                    poch_eval(rat_qpow(q, -2), rat_qpow(q, -2), (n - i) / 2) *
                    rat_qpow(q, choose2(n + 1L) - choose2(i + 1L));
            break;
    }
    value.canonicalize();
    ensure(value.get_den() == 1 && value >= 0, "rank count clears to a nonnegative integer");
    return value.get_num();
}

std::map<int, long> rank_count_enumerate(const MatrixSpaceKind& space, int q, int jobs) {
    const GaloisField F(q);
    const int dim = space.free_coordinates();
    const long long total = checked_power(q, dim, 10'000'000ull);
    const int s = space.size;

    std::vector<std::vector<long>> partial(
        static_cast<size_t>(std::max(1, jobs)), std::vector<long>(static_cast<size_t>(s) + 1, 0));
    auto run_range = [&](long long lo, long long hi, std::vector<long>& counts) {
        std::vector<int> digits(static_cast<size_t>(dim));
        std::vector<int> m(static_cast<size_t>(s) * s);
        for (long long idx = lo; idx < hi; ++idx) {
            long long rem = idx;
            for (int k = 0; k < dim; ++k) {
                digits[static_cast<size_t>(k)] = static_cast<int>(rem % q);
                rem /= q;
            }
            fill_space_matrix(space, digits, F, m);
            std::vector<int> work = m;
            ++counts[static_cast<size_t>(gf_rank(F, work, s, s))];
        }
    };
    if (jobs <= 1) {
        run_range(0, total, partial[0]);
    } else {
        std::vector<std::thread> workers;
        long long chunk = (total + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            long long lo = j * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back(
                [&, j, lo, hi] { run_range(lo, hi, partial[static_cast<size_t>(j)]); });
        }
        for (auto& w : workers) w.join();
    }
    std::map<int, long> out;
    for (const auto& counts : partial)
        for (int r = 0; r <= s; ++r)
            if (counts[static_cast<size_t>(r)] != 0) out[r] += counts[static_cast<size_t>(r)];
    return out;
}

template <class T>
Matrix<T> commutator_matrix(const GroupScheme& g, const std::vector<T>& w) {
    if (static_cast<long>(w.size()) != g.d_rank())
        throw DomainError("coordinate vector length must equal d_rank");
    const int n = g.n;
    const int r = g.matrix_size();
    Matrix<T> m(r, r);
    size_t k = 0;
    switch (g.family) {
        case Family::F:
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    m.at(i, j) = w[k];
                    m.at(j, i) = -w[k];
                    ++k;
                }
            break;
        case Family::G:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    m.at(i, n + j) = w[k];
                    m.at(n + j, i) = -w[k];
                    ++k;
                }
            break;
        case Family::H:
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    m.at(i, n + j) = w[k];
                    m.at(n + j, i) = -w[k];
                    if (i != j) {
                        m.at(j, n + i) = w[k];
                        m.at(n + i, j) = -w[k];
                    }
                    ++k;
                }
            break;
    }
    return m;
}

namespace {

template <class T>
T abs_of(const T& v) {
    return v < 0 ? T(-v) : v;
}

template <class T>
std::vector<T> collect_diagonal(const Matrix<T>& m) {
    std::vector<T> d(static_cast<size_t>(m.cols), T(0));
    const int steps = std::min(m.rows, m.cols);
    for (int t = 0; t < steps; ++t) d[static_cast<size_t>(t)] = abs_of(m.at(t, t));
    return d;
}

} // namespace

template <class T>
std::vector<T> smith_diagonal(Matrix<T> m) {
    const int steps = std::min(m.rows, m.cols);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing submatrix becomes the pivot.
            int pr = -1, pc = -1;
            for (int r = t; r < m.rows; ++r)
                for (int c = t; c < m.cols; ++c) {
                    if (m.at(r, c) == 0) continue;
                    if (pr < 0 || abs_of(m.at(r, c)) < abs_of(m.at(pr, pc))) {
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) return collect_diagonal(m); // trailing block is zero
            if (pr != t)
                for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
            if (pc != t)
                for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

            bool clean = true;
            for (int r = t + 1; r < m.rows; ++r) {
                if (m.at(r, t) == 0) continue;
                T f = m.at(r, t) / m.at(t, t);
                for (int c = t; c < m.cols; ++c) m.at(r, c) -= f * m.at(t, c);
                if (m.at(r, t) != 0) clean = false;
            }
            for (int c = t + 1; c < m.cols; ++c) {
                if (m.at(t, c) == 0) continue;
                T f = m.at(t, c) / m.at(t, t);
                for (int r = t; r < m.rows; ++r) m.at(r, c) -= f * m.at(r, t);
                if (m.at(t, c) != 0) clean = false;
            }
            if (clean) break;
        }
    }
    return collect_diagonal(m);
}

template <class T>
std::vector<int> capped_divisor_valuations(const Matrix<T>& mat, long p, int N) {
    ensure(p >= 2 && N >= 0, "capped_divisor_valuations wants p >= 2, N >= 0");
    Matrix<T> stacked(mat.rows + mat.cols, mat.cols);
    for (int r = 0; r < mat.rows; ++r)
        for (int c = 0; c < mat.cols; ++c) stacked.at(r, c) = mat.at(r, c);
    T pN(1);
    for (int i = 0; i < N; ++i) pN *= T(p);
    for (int c = 0; c < mat.cols; ++c) stacked.at(mat.rows + c, c) = pN;

    std::vector<T> diag = smith_diagonal(std::move(stacked));
    std::vector<int> vals;
    vals.reserve(diag.size());
    for (T d : diag) {
        ensure(d != 0, "stacked matrix has full column rank");
        int v = 0;
        while (d % T(p) == 0) {
            d /= T(p);
            ++v;
        }
        ensure(d == 1 && v <= N, "elementary divisors divide p^N");
        vals.push_back(v);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

template <class T>
std::vector<int> nu_type(const Matrix<T>& mat, long p, int N) {
    ensure(mat.rows == mat.cols, "nu_type wants a square matrix");
    for (int r = 0; r < mat.rows; ++r)
        for (int c = 0; c < mat.cols; ++c)
            ensure(mat.at(r, c) == -mat.at(c, r), "nu_type wants an antisymmetric matrix");
    std::vector<int> vals = capped_divisor_valuations(mat, p, N);
    const int r = mat.rows;
    std::vector<int> nu;
    nu.reserve(static_cast<size_t>(r / 2));
    for (int k = 0; k + 1 < r; k += 2) {
        ensure(vals[static_cast<size_t>(k)] == vals[static_cast<size_t>(k + 1)],
               "elementary divisors of an antisymmetric matrix pair up");
        nu.push_back(vals[static_cast<size_t>(k)]);
    }
    if (r % 2 == 1)
        ensure(vals[static_cast<size_t>(r - 1)] == N, "odd antisymmetric matrix is singular");
    return nu;
}

std::vector<int> type_profile(const SubsetIndex& I, const std::vector<int>& r_I) {
    const int l = I.size();
    if (static_cast<int>(r_I.size()) != l)
        throw DomainError("r_I must assign one positive integer per element of I");
    for (int r : r_I)
        if (r < 1) throw DomainError("r_I entries must be positive");
    std::vector<int> profile;
    profile.reserve(static_cast<size_t>(I.n));
    int value = 0;
    for (int j = l; j >= 0; --j) {
        for (int c = 0; c < I.mu(j); ++c) profile.push_back(value);
        if (j > 0) value += r_I[static_cast<size_t>(j - 1)];
    }
    return profile;
}

Int count_type_closed(const GroupScheme& g, const SubsetIndex& I,
                      const std::vector<int>& r_I, long p) {
    if (static_cast<int>(r_I.size()) != I.size())
        throw DomainError("r_I must assign one positive integer per element of I");
    std::array<Rat, kNumVars> point;
    point.fill(Rat(0));
    point[static_cast<int>(Var::X)] = rat_qpow(p, -1);
    Rat value = f_poly(g, I).eval_rat(point);
    long weight = 0;
    for (int k = 0; k < I.size(); ++k)
        weight += r_I[static_cast<size_t>(k)] * a_exp(g, I.elements[static_cast<size_t>(k)]);
    value *= rat_qpow(p, weight);
    value.canonicalize();
    ensure(value.get_den() == 1 && value >= 0, "type count clears to a nonnegative integer");
    return value.get_num();
}

long count_type_enumerate(const GroupScheme& g, const SubsetIndex& I,
                          const std::vector<int>& r_I, long p, int jobs) {
    std::vector<int> profile = type_profile(I, r_I);
    int N = 0;
    for (int r : r_I) N += r;
    if (N == 0) return 1; // W_0 = {0}* = {0}, matching the all-zero profile
    const long d = g.d_rank();
    const long long modulus = checked_power(p, N, 10'000'000ull);
    const long long total = checked_power(modulus, d, 10'000'000ull);

    auto per_range = [&](long long lo, long long hi) {
        std::vector<long long> w(static_cast<size_t>(d));
        long long found = 0;
        for (long long idx = lo; idx < hi; ++idx) {
            long long rem = idx;
            bool primitive = false;
            for (long k = 0; k < d; ++k) {
                w[static_cast<size_t>(k)] = rem % modulus;
                primitive = primitive || (w[static_cast<size_t>(k)] % p != 0);
                rem /= modulus;
            }
            if (!primitive) continue;
            SmallMat cm = commutator_matrix(g, w);
            if (nu_type(cm, p, N) == profile) ++found;
        }
        return found;
    };
    return static_cast<long>(parallel_count(total, jobs, per_range));
}

std::vector<long> local_zeta_truncation_oracle(const GroupScheme& g, long p, int t_order,
                                               int jobs) {
    std::vector<long> coeffs(static_cast<size_t>(t_order) + 1, 0);
    for (const auto& I : SubsetIndex::all(g.n)) {
        if (I.size() == 0) {
            coeffs[0] += 1;
            continue;
        }
        // Weights of r_I: sum r_i (n - i); enumerate all r with weight <= t_order.
        std::vector<int> r(static_cast<size_t>(I.size()), 1);
        std::function<void(int, int)> walk = [&](int pos, int weight_used) {
            if (pos == I.size()) {
                long count = count_type_enumerate(g, I, r, p, jobs);
                int w = 0;
                for (int k = 0; k < I.size(); ++k)
                    w += r[static_cast<size_t>(k)] * (g.n - I.elements[static_cast<size_t>(k)]);
                coeffs[static_cast<size_t>(w)] += count;
                return;
            }
            const int unit = g.n - I.elements[static_cast<size_t>(pos)];
            int remaining_min = 0;
            for (int k = pos + 1; k < I.size(); ++k)
                remaining_min += g.n - I.elements[static_cast<size_t>(k)];
            for (int v = 1; weight_used + v * unit + remaining_min <= t_order; ++v) {
                r[static_cast<size_t>(pos)] = v;
                walk(pos + 1, weight_used + v * unit);
            }
        };
        int min_weight = 0;
        for (int i : I.elements) min_weight += g.n - i;
        if (min_weight <= t_order) walk(0, 0);
    }
    return coeffs;
}

template Matrix<Int> commutator_matrix(const GroupScheme&, const std::vector<Int>&);
template Matrix<long long> commutator_matrix(const GroupScheme&, const std::vector<long long>&);
template std::vector<Int> smith_diagonal(Matrix<Int>);
template std::vector<long long> smith_diagonal(Matrix<long long>);
template std::vector<int> capped_divisor_valuations(const Matrix<Int>&, long, int);
template std::vector<int> capped_divisor_valuations(const Matrix<long long>&, long, int);
template std::vector<int> nu_type(const Matrix<Int>&, long, int);
template std::vector<int> nu_type(const Matrix<long long>&, long, int);

} // namespace repzeta
