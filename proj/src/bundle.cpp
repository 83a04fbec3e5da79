#include "quadric/bundle.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <random>
#include <sstream>

#include "quadric/errors.hpp"

namespace quadric {

namespace {

int popcount(IndexSet s) { return std::popcount(s); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

PatternQuadricBundle::PatternQuadricBundle(std::vector<std::int64_t> degrees,
                                           std::vector<std::vector<bool>> pattern,
                                           std::int64_t twist_degree, std::int64_t genus)
    : degrees_(std::move(degrees)), twist_degree_(twist_degree), genus_(genus), total_degree_(0) {
    const auto n = degrees_.size();
    if (n == 0) throw InvalidBundle("bundle must have at least one summand");
    if (static_cast<std::int64_t>(n) > kMaxRank)
        throw InvalidBundle("rank " + std::to_string(n) + " exceeds the supported maximum " +
                            std::to_string(kMaxRank));
    if (genus_ < 2) throw InvalidBundle("genus must be at least 2");
    if (pattern.size() != n) throw InvalidBundle("pattern must have one row per summand");
    for (std::size_t i = 0; i < n; ++i) {
        if (pattern[i].size() != n)
            throw InvalidBundle("pattern row " + std::to_string(i + 1) + " has " +
                                std::to_string(pattern[i].size()) + " entries, expected " +
                                std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (pattern[i][j] != pattern[j][i])
                throw InvalidBundle("pattern is not symmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
    rows_.assign(n, 0);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!pattern[i][j]) continue;
            if (twist_degree_ - degrees_[i] - degrees_[j] < 0)
                throw InvalidBundle("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") is generic but d_L - a_i - a_j = " +
                                    std::to_string(twist_degree_ - degrees_[i] - degrees_[j]) + " < 0");
            rows_[i] |= IndexSet{1} << j;
            any = true;
        }
    }
    if (!any) throw InvalidBundle("gamma must be non-zero: pattern has no generic entry");
    for (auto a : degrees_) total_degree_ += a;
}

std::int64_t PatternQuadricBundle::degree_of(IndexSet s) const noexcept {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (s >> i & 1u) sum += degrees_[i];
    return sum;
}

IndexSet PatternQuadricBundle::row_support(IndexSet s) const noexcept {
    IndexSet out = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (s >> i & 1u) out |= rows_[i];
    return out;
}

bool PatternQuadricBundle::block_nonzero(IndexSet a, IndexSet b) const noexcept {
    return (row_support(a) & b) != 0;
}

std::string PatternQuadricBundle::to_spec() const {
    std::ostringstream os;
    os << "genus " << genus_ << "\n";
    os << "dL " << twist_degree_ << "\n";
    os << "degrees";
    for (auto a : degrees_) os << ' ' << a;
    os << "\n";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        for (std::size_t j = 0; j < degrees_.size(); ++j) os << (j ? " " : "") << (generic(i, j) ? '*' : '0');
        os << "\n";
    }
    return os.str();
}

PatternQuadricBundle parse_bundle_spec(std::istream& in) {
    std::optional<std::int64_t> genus, twist;
    std::optional<std::vector<std::int64_t>> degrees;
    std::vector<std::vector<bool>> pattern;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw InvalidBundle("line " + std::to_string(lineno) + ": " + what);
    };
    auto read_int = [&](std::istringstream& ss, const char* field) {
        std::string tok;
        if (!(ss >> tok)) fail(std::string("missing value for ") + field);
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            fail(std::string("bad integer '") + tok + "' for " + field);
        }
        if (pos != tok.size()) fail(std::string("bad integer '") + tok + "' for " + field);
        return v;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key)) continue;
        if (key == "genus") {
            if (genus) fail("duplicate 'genus'");
            genus = read_int(ss, "genus");
        } else if (key == "dL") {
            if (twist) fail("duplicate 'dL'");
            twist = read_int(ss, "dL");
        } else if (key == "degrees") {
            if (degrees) fail("duplicate 'degrees'");
            degrees.emplace();
            std::string tok;
            while (ss >> tok) {
                std::istringstream one(tok);
                degrees->push_back(read_int(one, "degrees"));
            }
            if (degrees->empty()) fail("'degrees' needs at least one entry");
            continue;
        } else if (key == "0" || key == "*") {
            if (!degrees) fail("pattern row before 'degrees'");
            std::vector<bool> row;
            std::string tok = key;
            do {
                if (tok == "*") row.push_back(true);
                else if (tok == "0") row.push_back(false);
                else fail("pattern symbol '" + tok + "' is not 0 or *");
            } while (ss >> tok);
            if (row.size() != degrees->size())
                fail("pattern row has " + std::to_string(row.size()) + " symbols, expected " +
                     std::to_string(degrees->size()));
            if (pattern.size() == degrees->size()) fail("too many pattern rows");
            pattern.push_back(std::move(row));
            continue;
        } else {
            fail("unknown field '" + key + "'");
        }
        std::string extra;
        if (ss >> extra) fail("trailing token '" + extra + "'");
    }
    if (!genus) throw InvalidBundle("missing 'genus'");
    if (!twist) throw InvalidBundle("missing 'dL'");
    if (!degrees) throw InvalidBundle("missing 'degrees'");
    if (pattern.size() != degrees->size())
        throw InvalidBundle("expected " + std::to_string(degrees->size()) + " pattern rows, got " +
                            std::to_string(pattern.size()));
    return PatternQuadricBundle(std::move(*degrees), std::move(pattern), *twist, *genus);
}

PatternQuadricBundle parse_bundle_spec_string(const std::string& text) {
    std::istringstream in(text);
    return parse_bundle_spec(in);
}

std::string clause_name(Clause c) {
    switch (c) {
        case Clause::NonIsotropic: return "1a";
        case Clause::Isotropic: return "1b";
        case Clause::Killed: return "1c";
        case Clause::Filtration: return "2";
    }
    return "?";
}

std::string class_name(StabilityClass c) {
    switch (c) {
        case StabilityClass::Stable: return "stable";
        case StabilityClass::StrictlySemistable: return "strictly_semistable";
        case StabilityClass::Polystable: return "polystable";
        case StabilityClass::Unstable: return "unstable";
    }
    return "?";
}

std::string to_string(const CoordinateSubobject& s) {
    auto list = [](IndexSet set) {
        std::string out = "{";
        bool first = true;
        for (int i = 0; set >> i; ++i) {
            if (!(set >> i & 1u)) continue;
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
        return out + "}";
    };
    return s.is_filtration() ? list(s.first) + " < " + list(s.second) : list(s.first);
}

Clause subobject_class(const PatternQuadricBundle& bundle, IndexSet subset) {
    const IndexSet support = bundle.row_support(subset);
    if (support & subset) return Clause::NonIsotropic;
    if (support == 0) return Clause::Killed;
    return Clause::Isotropic;
}

bool admissible_filtration(const PatternQuadricBundle& b, IndexSet first, IndexSet second) {
    return first != 0 && (first & second) == first && first != second && second != b.full_set() &&
           !b.block_nonzero(first, second) && b.block_nonzero(second, second);
}

namespace {

bool decomposes(const PatternQuadricBundle& b, const CoordinateSubobject& s, Clause clause) {
    const IndexSet full = b.full_set();
    switch (clause) {
        case Clause::NonIsotropic: {
            // gamma = (gamma' 0; 0 0)
            const IndexSet rest = full & ~s.first;
            return !b.block_nonzero(s.first, rest) && !b.block_nonzero(rest, rest);
        }
        case Clause::Isotropic: {
            // gamma = (0 gamma'; -gamma'^t 0)
            const IndexSet rest = full & ~s.first;
            return !b.block_nonzero(rest, rest) && b.block_nonzero(s.first, rest);
        }
        case Clause::Killed:
            // gamma(V') = 0 already puts gamma on the complement.
            return true;
        case Clause::Filtration: {
            // blocks (V', V''/V', V/V''): anti-diagonal gamma', gamma'' on the middle.
            const IndexSet mid = s.second & ~s.first;
            const IndexSet top = full & ~s.second;
            return !b.block_nonzero(mid, top) && !b.block_nonzero(top, top);
        }
    }
    return false;
}

Inequality make_inequality(const PatternQuadricBundle& b, const CoordinateSubobject& s, Clause clause) {
    const auto n = b.rank();
    const auto d = b.degree();
    const std::int64_t r = popcount(s.first);
    const auto deg = b.degree_of(s.first);
    Inequality q{s, clause, 0, 0, false};
    switch (clause) {
        case Clause::NonIsotropic:  // deg <= d + alpha (r - n)
            q.constant = 2 * (d - deg);
            q.slope = 2 * (r - n);
            break;
        case Clause::Isotropic:  // deg <= d/2 + alpha (r - n/2)
            q.constant = d - 2 * deg;
            q.slope = 2 * r - n;
            break;
        case Clause::Killed:  // deg <= alpha r
            q.constant = -2 * deg;
            q.slope = 2 * r;
            break;
        case Clause::Filtration:  // deg' + deg'' <= d + alpha (r' + r'' - n)
            q.constant = 2 * (d - deg - b.degree_of(s.second));
            q.slope = 2 * (r + popcount(s.second) - n);
            break;
    }
    q.decomposes = decomposes(b, s, clause);
    return q;
}

}  // namespace

int Inequality::sign(const Rational& alpha) const {
    const __int128 v = static_cast<__int128>(constant) * alpha.denominator() +
                       static_cast<__int128>(slope) * alpha.numerator();
    return (v > 0) - (v < 0);
}

std::optional<Rational> Inequality::root() const {
    if (slope == 0) return std::nullopt;
    return Rational(-constant, slope);
}

StabilityProfile::StabilityProfile(const PatternQuadricBundle& bundle)
    : slope_(bundle.degree(), bundle.rank()), alpha_independent_(is_alpha_independent(bundle)) {
    const IndexSet full = bundle.full_set();
    for (IndexSet s = 1; s < full; ++s) {
        inequalities_.push_back(make_inequality(bundle, {s, 0}, subobject_class(bundle, s)));
        // proper supersets of s
        for (IndexSet t = (s + 1) | s; t < full; t = (t + 1) | s) {
            if (admissible_filtration(bundle, s, t))
                inequalities_.push_back(make_inequality(bundle, {s, t}, Clause::Filtration));
        }
    }
}

StabilityClass StabilityProfile::class_at(const Rational& alpha) const {
    if (alpha > slope_) return StabilityClass::Unstable;
    bool zero = false;
    bool all_split = true;
    for (const auto& q : inequalities_) {
        const int s = q.sign(alpha);
        if (s < 0) return StabilityClass::Unstable;
        if (s == 0) {
            zero = true;
            all_split = all_split && q.decomposes;
        }
    }
    if (!zero) return StabilityClass::Stable;
    return all_split ? StabilityClass::Polystable : StabilityClass::StrictlySemistable;
}

bool StabilityProfile::has_zero_slack(const Rational& alpha) const {
    return std::any_of(inequalities_.begin(), inequalities_.end(),
                       [&](const Inequality& q) { return q.sign(alpha) == 0; });
}

StabilityVerdict StabilityProfile::classify(const Rational& alpha) const {
    StabilityVerdict v;
    v.alpha_above_slope = alpha > slope_;
    v.alpha_independent = alpha_independent_;
    v.cls = class_at(alpha);
    for (const auto& q : inequalities_) {
        if (q.sign(alpha) > 0) continue;
        Witness w{q.subobject, q.clause, q.slack(alpha)};
        w.decomposes = w.slack == Rational(0) && q.decomposes;
        v.witnesses.push_back(w);
    }
    std::stable_sort(v.witnesses.begin(), v.witnesses.end(), [](const Witness& a, const Witness& b) {
        if (a.slack != b.slack) return a.slack < b.slack;
        if (a.subobject.first != b.subobject.first) return a.subobject.first < b.subobject.first;
        return a.subobject.second < b.subobject.second;
    });
    return v;
}

Rational slack_at(const PatternQuadricBundle& bundle, const CoordinateSubobject& s, const Rational& alpha) {
    const Clause c = s.is_filtration() ? Clause::Filtration : subobject_class(bundle, s.first);
    return make_inequality(bundle, s, c).slack(alpha);
}

StabilityVerdict classify(const PatternQuadricBundle& bundle, const Rational& alpha) {
    return StabilityProfile(bundle).classify(alpha);
}

bool is_alpha_independent(const PatternQuadricBundle& bundle) {
    const auto n = bundle.rank();
    const auto d = bundle.degree();
    const IndexSet full = bundle.full_set();
    for (IndexSet s = 1; s < full; ++s) {
        const auto r = popcount(s);
        const auto deg = bundle.degree_of(s);
        if (2 * r == n && 2 * deg == d && !bundle.block_nonzero(s, s)) return true;
        for (IndexSet t = (s + 1) | s; t < full; t = (t + 1) | s) {
            if (r + popcount(t) == n && deg + bundle.degree_of(t) == d && admissible_filtration(bundle, s, t))
                return true;
        }
    }
    return false;
}

std::int64_t generic_rank(const PatternQuadricBundle& bundle, const RankOptions& options) {
    constexpr std::uint64_t p = 2147483647ull;  // 2^31 - 1
    const auto n = static_cast<std::size_t>(bundle.rank());

    std::uint64_t seed = splitmix64(options.seed);
    seed = splitmix64(seed ^ n);
    for (std::size_t i = 0; i < n; ++i) seed = splitmix64(seed ^ bundle.row_support(IndexSet{1} << i));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> entry(1, p - 1);

    auto inverse = [&](std::uint64_t a) {
        std::uint64_t result = 1, e = p - 2;
        while (e) {
            if (e & 1) result = result * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return result;
    };

    std::int64_t best = 0;
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (int trial = 0; trial < std::max(options.trials, 1); ++trial) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = bundle.generic(i, j) ? entry(rng) : 0;

        std::int64_t rank = 0;
        for (std::size_t col = 0; col < n && static_cast<std::size_t>(rank) < n; ++col) {
            std::size_t pivot = static_cast<std::size_t>(rank);
            while (pivot < n && m[pivot][col] == 0) ++pivot;
            if (pivot == n) continue;
            std::swap(m[pivot], m[rank]);
            const auto inv = inverse(m[rank][col]);
            for (std::size_t r = rank + 1; r < n; ++r) {
                if (m[r][col] == 0) continue;
                const auto factor = m[r][col] * inv % p;
                for (std::size_t c = col; c < n; ++c) m[r][c] = (m[r][c] + (p - factor) * m[rank][c]) % p;
            }
            ++rank;
        }
        best = std::max(best, rank);
        if (best == static_cast<std::int64_t>(n)) break;
    }
    return best;
}

bool underlying_bundle_semistable(const PatternQuadricBundle& bundle) {
    auto sorted = bundle.degrees();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const auto n = bundle.rank();
    const auto d = bundle.degree();
    std::int64_t prefix = 0;
    for (std::int64_t k = 1; k < n; ++k) {
        prefix += sorted[k - 1];
        if (prefix * n > k * d) return false;
    }
    return true;
}

}  // namespace quadric
