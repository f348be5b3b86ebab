#include "macc/placement.hpp"

#include <algorithm>

namespace macc {

std::vector<RoundPlan> scheme1_round_plan(int caches, int access, int t)
{
    if (access < 1 || access >= caches || t < 1 || t > caches - access + 1) {
        throw ConfigError("round plan needs 1 <= r < C and t in [1, C - r + 1]");
    }
    const int R = std::min(access, t);
    const std::uint64_t rfact = factorial_u64(R);
    const std::uint64_t B = binom_u64(caches - 1, t - 1);

    std::vector<RoundPlan> plans;
    plans.push_back(RoundPlan{0, factorial_u64(R - 1), 0, B, 0});
    for (int b = 1; b < R; ++b) {
        RoundPlan p;
        p.round = b;
        p.span = rfact / static_cast<std::uint64_t>((R - b) * (R - b + 1));
        p.base = static_cast<std::uint64_t>(t) * rfact / static_cast<std::uint64_t>(R - b + 1);
        p.B = B;
        BigInt d = 0;
        for (int i = 1; i <= b; ++i) {
            d += binom_signed(access - 1, R - i) * binom_signed(caches - access, t - R + i - 1);
        }
        p.D = d.convert_to<std::uint64_t>();
        plans.push_back(p);
    }
    return plans;
}

MdsCode scheme1_inner_code(const SchemeConfig& config)
{
    const std::size_t k = factorial_u64(config.rtilde());
    return systematic_rs(k, k * static_cast<std::size_t>(config.t), config.field());
}

MdsCode scheme1_round_code(const SchemeConfig& config, const RoundPlan& plan)
{
    return systematic_rs(plan.B, plan.code_length(), config.field());
}

MdsCode corner_code(const SchemeConfig& config)
{
    return rs_generator(static_cast<std::size_t>(config.access), static_cast<std::size_t>(config.caches),
                        config.field());
}

MdsCode scheme2_code(const SchemeConfig& config)
{
    const auto n = static_cast<std::size_t>(config.files);
    const std::size_t kp = binom_u64(config.caches - 1, config.access);
    return systematic_rs(n, 2 * n - kp, config.field());
}

std::vector<NamedCode> scheme_codes(const SchemeConfig& config)
{
    std::vector<NamedCode> out;
    switch (config.scheme) {
    case Scheme::Mkr:
        break;
    case Scheme::Scheme1: {
        out.push_back({"inner", scheme1_inner_code(config)});
        for (const auto& plan : scheme1_round_plan(config.caches, config.access, config.t)) {
            if (plan.round > 0) {
                out.push_back({"round" + std::to_string(plan.round), scheme1_round_code(config, plan)});
            }
        }
        break;
    }
    case Scheme::Corner:
        out.push_back({"corner", corner_code(config)});
        break;
    case Scheme::Scheme2:
        out.push_back({"scheme2", scheme2_code(config)});
        break;
    }
    return out;
}

namespace {

CacheContents empty_caches(const SchemeConfig& config)
{
    CacheContents z;
    z.caches.resize(static_cast<std::size_t>(config.caches));
    return z;
}

void add_scaled_terms(std::vector<Term>& dst, const std::vector<Term>& src, Symbol coeff, const Field& field)
{
    if (coeff == 0) {
        return;
    }
    for (const auto& term : src) {
        auto it = std::find_if(dst.begin(), dst.end(), [&](const Term& x) { return x.piece == term.piece; });
        const Symbol v = field.mul(coeff, term.coeff);
        if (it == dst.end()) {
            dst.push_back({term.piece, v});
        } else {
            it->coeff = Field::add(it->coeff, v);
        }
    }
    std::erase_if(dst, [](const Term& x) { return x.coeff == 0; });
}

} // namespace

CacheContents place_mkr(const SchemeConfig& config, const Library& lib)
{
    CacheContents z = empty_caches(config);
    const SubsetTable subsets(config.caches, config.t);
    for (int c = 1; c <= config.caches; ++c) {
        auto& cache = z.caches[static_cast<std::size_t>(c - 1)];
        for (int n = 1; n <= config.files; ++n) {
            for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
                if (!subsets.at(ti).contains(c)) {
                    continue;
                }
                Block b;
                b.label.kind = BlockKind::Subfile;
                b.label.file = n;
                b.label.subset = static_cast<std::uint32_t>(ti);
                b.label.terms = {{piece_id(config, n, ti), 1}};
                b.data = piece_of(config, lib, n, ti);
                cache.push_back(std::move(b));
            }
        }
    }
    return z;
}

CacheContents place_scheme1(const SchemeConfig& config, const Library& lib)
{
    if (config.scheme != Scheme::Scheme1) {
        throw ConfigError("place_scheme1 called for scheme " + scheme_name(config.scheme));
    }
    const Field& field = config.field();
    const SubsetTable subsets(config.caches, config.t);
    const std::size_t p = config.pieces_per_subfile();
    const std::size_t len = config.piece_length();
    const MdsCode inner = scheme1_inner_code(config);
    const auto plans = scheme1_round_plan(config.caches, config.access, config.t);

    // Y[n-1][T][l-1]: coded mini-subfiles with their labels.
    struct Coded {
        std::vector<Symbol> data;
        std::vector<Term> terms;
    };
    std::vector<std::vector<std::vector<Coded>>> Y(static_cast<std::size_t>(config.files));
    for (int n = 1; n <= config.files; ++n) {
        auto& yn = Y[static_cast<std::size_t>(n - 1)];
        yn.resize(subsets.size());
        for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
            std::vector<std::vector<Symbol>> message;
            for (std::size_t j = 0; j < p; ++j) {
                message.push_back(piece_of(config, lib, n, scheme1_piece(config, ti, j)));
            }
            auto coded = encode_blocks(message, inner);
            for (std::size_t l = 0; l < inner.n; ++l) {
                Coded y{std::move(coded[l]), {}};
                for (std::size_t j = 0; j < p; ++j) {
                    if (inner.generator(j, l) != 0) {
                        y.terms.push_back({piece_id(config, n, scheme1_piece(config, ti, j)), inner.generator(j, l)});
                    }
                }
                yn[ti].push_back(std::move(y));
            }
        }
    }

    std::vector<FieldMatrix> parity(plans.size());
    for (const auto& plan : plans) {
        if (plan.round > 0) {
            parity[static_cast<std::size_t>(plan.round)] = parity_block(scheme1_round_code(config, plan));
        }
    }

    CacheContents z = empty_caches(config);
    for (int c = 1; c <= config.caches; ++c) {
        auto& cache = z.caches[static_cast<std::size_t>(c - 1)];
        std::vector<std::size_t> mine; // subsets containing c, lexicographic
        for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
            if (subsets.at(ti).contains(c)) {
                mine.push_back(ti);
            }
        }
        for (int n = 1; n <= config.files; ++n) {
            const auto& yn = Y[static_cast<std::size_t>(n - 1)];
            const RoundPlan& r0 = plans.front();
            for (std::size_t ti : mine) {
                const std::uint64_t first = r0.first_index(phi(c, subsets.at(ti)));
                for (std::uint64_t l = first; l < first + r0.span; ++l) {
                    const Coded& y = yn[ti][l - 1];
                    Block b;
                    b.label.kind = BlockKind::RoundZero;
                    b.label.file = n;
                    b.label.subset = static_cast<std::uint32_t>(ti);
                    b.label.cache = c;
                    b.label.index = static_cast<int>(l);
                    b.label.terms = y.terms;
                    b.data = y.data;
                    cache.push_back(std::move(b));
                }
            }
            for (std::size_t pi = 1; pi < plans.size(); ++pi) {
                const RoundPlan& plan = plans[pi];
                const FieldMatrix& P = parity[pi];
                for (std::uint64_t l = 1; l <= plan.span; ++l) {
                    for (std::size_t col = 0; col < plan.parity_count(); ++col) {
                        Block b;
                        b.label.kind = BlockKind::RoundParity;
                        b.label.file = n;
                        b.label.cache = c;
                        b.label.round = plan.round;
                        b.label.index = static_cast<int>(l);
                        b.label.column = static_cast<int>(col);
                        b.data.assign(len, 0);
                        for (std::size_t k = 0; k < mine.size(); ++k) {
                            const std::uint64_t idx = plan.first_index(phi(c, subsets.at(mine[k]))) + l - 1;
                            const Coded& y = yn[mine[k]][idx - 1];
                            field.axpy(b.data.data(), y.data.data(), len, P(k, col));
                            add_scaled_terms(b.label.terms, y.terms, P(k, col), field);
                        }
                        cache.push_back(std::move(b));
                    }
                }
            }
        }
    }
    return z;
}

CacheContents place_corner(const SchemeConfig& config, const Library& lib)
{
    if (config.scheme != Scheme::Corner) {
        throw ConfigError("place_corner called for scheme " + scheme_name(config.scheme));
    }
    const MdsCode code = corner_code(config);
    CacheContents z = empty_caches(config);
    for (int n = 1; n <= config.files; ++n) {
        std::vector<std::vector<Symbol>> message;
        for (std::size_t j = 0; j < code.k; ++j) {
            message.push_back(piece_of(config, lib, n, j));
        }
        auto coded = encode_blocks(message, code);
        for (int c = 1; c <= config.caches; ++c) {
            Block b;
            b.label.kind = BlockKind::CornerCoded;
            b.label.file = n;
            b.label.cache = c;
            for (std::size_t j = 0; j < code.k; ++j) {
                const Symbol g = code.generator(j, static_cast<std::size_t>(c - 1));
                if (g != 0) {
                    b.label.terms.push_back({piece_id(config, n, j), g});
                }
            }
            b.data = std::move(coded[static_cast<std::size_t>(c - 1)]);
            z.caches[static_cast<std::size_t>(c - 1)].push_back(std::move(b));
        }
    }
    return z;
}

CacheContents place_scheme2(const SchemeConfig& config, const Library& lib)
{
    if (config.scheme != Scheme::Scheme2) {
        throw ConfigError("place_scheme2 called for scheme " + scheme_name(config.scheme));
    }
    const Field& field = config.field();
    const FieldMatrix P = parity_block(scheme2_code(config));
    const std::size_t len = config.piece_length();
    CacheContents z = empty_caches(config);
    for (int i = 1; i <= config.caches; ++i) {
        const auto local = static_cast<std::size_t>(i - 1);
        for (std::size_t col = 0; col < P.cols(); ++col) {
            Block b;
            b.label.kind = BlockKind::Scheme2Parity;
            b.label.cache = i;
            b.label.column = static_cast<int>(col);
            b.data.assign(len, 0);
            for (int n = 1; n <= config.files; ++n) {
                const Symbol g = P(static_cast<std::size_t>(n - 1), col);
                if (g == 0) {
                    continue;
                }
                const auto piece = piece_of(config, lib, n, local);
                field.axpy(b.data.data(), piece.data(), len, g);
                b.label.terms.push_back({piece_id(config, n, local), g});
            }
            z.caches[local].push_back(std::move(b));
        }
    }
    return z;
}

CacheContents place(const SchemeConfig& config, const Library& lib)
{
    switch (config.scheme) {
    case Scheme::Mkr:
        return place_mkr(config, lib);
    case Scheme::Scheme1:
        return place_scheme1(config, lib);
    case Scheme::Corner:
        return place_corner(config, lib);
    case Scheme::Scheme2:
        return place_scheme2(config, lib);
    }
    throw ConfigError("unknown scheme");
}

} // namespace macc
