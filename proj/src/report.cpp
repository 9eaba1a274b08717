#include "evfuse/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>

namespace evfuse {

std::string format_fixed4(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 4);
    std::string s(buf, ec == std::errc{} ? end : buf);
    if (s == "-0.0000") {
        s = "0.0000";
    }
    return s;
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string triple(const MassFunction& m) {
    const BinaryMasses p = split(m);
    return "(" + format_fixed4(p.is) + ", " + format_fixed4(p.ns) + ", " + format_fixed4(p.theta) + ")";
}

std::string bound(IntervalBPA::Bounds b) {
    return "[" + format_fixed4(b.left) + ", " + format_fixed4(b.right) + "]";
}

std::string interval(const Interval& iv) {
    return "[" + format_fixed4(iv.lo()) + ", " + format_fixed4(iv.hi()) + "]";
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::size_t widest(const std::vector<std::string>& labels) {
    std::size_t w = 0;
    for (const auto& l : labels) {
        w = std::max(w, l.size());
    }
    return w;
}

const char* normalization_name(CriterionNormalization mode) {
    return mode == CriterionNormalization::pooled ? "pooled" : "per-dm";
}

void emit_trace_table(std::ostream& out, const RankingReport& r) {
    const std::size_t dm_w = widest(r.decision_makers);
    const std::size_t alt_w = widest(r.alternatives);
    const std::size_t crit_w = widest(r.criteria);

    out << "Normalized criterion weights (" << normalization_name(r.criterion_normalization) << ")\n";
    for (std::size_t d = 0; d < r.decision_makers.size(); ++d) {
        out << "  " << pad(r.decision_makers[d], dm_w);
        for (std::size_t c = 0; c < r.criteria.size(); ++c) {
            out << "  " << r.criteria[c] << ' ' << interval(r.normalized_criterion_weights[d][c]);
        }
        out << '\n';
    }
    out << "\nNormalized decision maker weights\n";
    for (std::size_t d = 0; d < r.decision_makers.size(); ++d) {
        out << "  " << pad(r.decision_makers[d], dm_w) << "  " << interval(r.normalized_dm_weights[d]) << '\n';
    }

    out << "\nDiscounted interval BPAs ({IS}, {NS}, {IS,NS}) as [left, right]\n";
    for (std::size_t d = 0; d < r.decision_makers.size(); ++d) {
        for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
            out << "  " << r.decision_makers[d] << " / " << r.alternatives[a] << '\n';
            for (std::size_t c = 0; c < r.criteria.size(); ++c) {
                const IntervalBPA& ib = r.discounted[d][a][c];
                out << "    " << pad(r.criteria[c], crit_w) << "  (" << bound(ib.is()) << ", " << bound(ib.ns())
                    << ", " << bound(ib.theta()) << ")\n";
            }
        }
    }

    auto emit_pairs = [&](const char* title, const std::vector<std::vector<IntervalBPA>>& table) {
        out << '\n' << title << '\n';
        for (std::size_t d = 0; d < r.decision_makers.size(); ++d) {
            for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
                const IntervalBPA& ib = table[d][a];
                out << "  " << pad(r.decision_makers[d], dm_w) << "  " << pad(r.alternatives[a], alt_w) << "  left "
                    << triple(ib.left()) << "  right " << triple(ib.right()) << '\n';
            }
        }
    };
    emit_pairs("Fused over criteria, per decision maker", r.per_dm_fused);
    emit_pairs("Discounted by decision maker weight", r.dm_discounted);

    out << "\nFused over decision makers\n";
    for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
        const IntervalBPA& ib = r.final_bpas[a];
        out << "  " << pad(r.alternatives[a], alt_w) << "  left " << triple(ib.left()) << "  right "
            << triple(ib.right()) << '\n';
    }

    out << "\nBelief in IS from one part alone\n";
    for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
        out << "  " << pad(r.alternatives[a], alt_w) << "  left bet=" << format_fixed4(r.left_bet_is[a])
            << "  right bet=" << format_fixed4(r.right_bet_is[a]) << '\n';
    }
    out << '\n';
}

void emit_summary_table(std::ostream& out, const RankingReport& r) {
    const std::size_t alt_w = widest(r.alternatives);
    const auto ranks = r.ranks();
    out << "Collapsed BPAs ({IS}, {NS}, {IS,NS}) and pignistic belief in IS\n";
    for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
        out << "  " << pad(r.alternatives[a], alt_w) << "  " << triple(r.collapsed[a])
            << " bet=" << format_fixed4(r.bet_is[a]) << "  rank " << ranks[a] << '\n';
    }
    out << "\nranking: ";
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
        out << (i ? " ≻ " : "") << r.alternatives[r.ranking[i]];
    }
    out << "\norder:   ";
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
        out << (i ? " ≻ " : "") << r.ranking[i] + 1;
    }
    out << '\n';
}

ordered_json parts(const IntervalBPA& ib) {
    auto masses = [](const MassFunction& m) {
        const BinaryMasses p = split(m);
        return ordered_json::array({p.is, p.ns, p.theta});
    };
    return ordered_json{{"left", masses(ib.left())}, {"right", masses(ib.right())}};
}

ordered_json trace_json(const RankingReport& r) {
    ordered_json t;
    t["criterion_normalization"] = normalization_name(r.criterion_normalization);
    ordered_json cw = ordered_json::object();
    ordered_json dw = ordered_json::object();
    ordered_json discounted = ordered_json::object();
    ordered_json fused = ordered_json::object();
    ordered_json dm_disc = ordered_json::object();
    for (std::size_t d = 0; d < r.decision_makers.size(); ++d) {
        const std::string& dm = r.decision_makers[d];
        for (std::size_t c = 0; c < r.criteria.size(); ++c) {
            const Interval& w = r.normalized_criterion_weights[d][c];
            cw[dm][r.criteria[c]] = ordered_json::array({w.lo(), w.hi()});
        }
        dw[dm] = ordered_json::array({r.normalized_dm_weights[d].lo(), r.normalized_dm_weights[d].hi()});
        for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
            const std::string& alt = r.alternatives[a];
            for (std::size_t c = 0; c < r.criteria.size(); ++c) {
                discounted[dm][alt][r.criteria[c]] = parts(r.discounted[d][a][c]);
            }
            fused[dm][alt] = parts(r.per_dm_fused[d][a]);
            dm_disc[dm][alt] = parts(r.dm_discounted[d][a]);
        }
    }
    t["normalized_criterion_weights"] = cw;
    t["normalized_dm_weights"] = dw;
    t["discounted"] = discounted;
    t["per_dm_fused"] = fused;
    t["dm_discounted"] = dm_disc;
    ordered_json final_bpas = ordered_json::object();
    ordered_json left_bet = ordered_json::object();
    ordered_json right_bet = ordered_json::object();
    for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
        final_bpas[r.alternatives[a]] = parts(r.final_bpas[a]);
        left_bet[r.alternatives[a]] = r.left_bet_is[a];
        right_bet[r.alternatives[a]] = r.right_bet_is[a];
    }
    t["final"] = final_bpas;
    t["left_bet_IS"] = left_bet;
    t["right_bet_IS"] = right_bet;
    return t;
}

void emit_json(std::ostream& out, const RankingReport& r, ReportMode mode) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["mode"] = mode == ReportMode::summary ? "summary" : "full-trace";
    const auto ranks = r.ranks();
    ordered_json alts = ordered_json::array();
    for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
        const BinaryMasses p = split(r.collapsed[a]);
        alts.push_back(ordered_json{{"label", r.alternatives[a]},
                                    {"collapsed", ordered_json{{"IS", p.is}, {"NS", p.ns}, {"IS,NS", p.theta}}},
                                    {"bet_IS", r.bet_is[a]},
                                    {"rank", ranks[a]}});
    }
    doc["alternatives"] = alts;
    doc["ranking"] = r.ranking_labels();
    if (mode == ReportMode::full_trace) {
        doc["trace"] = trace_json(r);
    }
    out << doc.dump(2) << '\n';
}

} // namespace

void emit_report(std::ostream& out, const RankingReport& report, ReportMode mode, ReportFormat format) {
    if (format == ReportFormat::json) {
        emit_json(out, report, mode);
        return;
    }
    if (mode == ReportMode::full_trace) {
        emit_trace_table(out, report);
    }
    emit_summary_table(out, report);
}

} // namespace evfuse
