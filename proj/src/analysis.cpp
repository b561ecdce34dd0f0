#include "conjucode/analysis.hpp"

#include <sstream>
#include <stdexcept>

namespace conjucode {

Analysis analyze(const Descriptor& d, const AnalysisOptions& options) {
    Analysis a;
    a.source = d;
    a.code = build_code(d);
    const AccCode& c = a.code;
    a.duality = duality_class(c);
    a.hull_dim = 2 * c.n() - static_cast<std::size_t>(hull_generator(c).degree());
    a.gram_rank = mat_rank(gram(c));
    a.hull_dim_rank = c.dim() - a.gram_rank;
    if (a.hull_dim != a.hull_dim_rank) throw std::logic_error("analyze: hull dimension routes disagree");
    a.acd = a.gram_rank == c.dim();
    a.acp = acp_rank_check(c.g(), c.n());
    a.trace = duality_report(c);
    a.trace_code = trace_code_of(c);
    a.trace_dual_code = trace_of_dual(c);
    a.trace_hull_dim = cyclic_hull_dim(a.trace_code);
    a.tr_subset = tr_subset_check(c);
    a.acc_d = min_gray_distance(c, options.max_dim, options.samples);
    a.trace_d = min_distance(a.trace_code, options.max_dim, options.samples);
    a.eaqec = eaqec_from_trace(a.trace_code, a.trace_d);
    return a;
}

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

std::string status_name(DistanceStatus s) {
    switch (s) {
        case DistanceStatus::exact: return "exact";
        case DistanceStatus::upper_bound: return "consistent-with";
        case DistanceStatus::empty_code: return "empty-code";
        case DistanceStatus::not_computed: break;
    }
    return "not-computed";
}

std::string distance_value(const DistanceResult& d) {
    if (d.status == DistanceStatus::exact || d.status == DistanceStatus::upper_bound) return std::to_string(d.value);
    return "-";
}

std::string triple(std::size_t n, std::size_t k, const DistanceResult& d) {
    std::string s = "[" + std::to_string(n) + "," + std::to_string(k) + ",";
    if (d.status == DistanceStatus::exact)
        s += std::to_string(d.value);
    else if (d.status == DistanceStatus::upper_bound)
        s += "<=" + std::to_string(d.value);
    else
        s += "?";
    return s + "]";
}

}  // namespace

void append_distance(Record& rec, const std::string& prefix, const DistanceResult& d) {
    rec.emplace_back(prefix + "_d", distance_value(d));
    rec.emplace_back(prefix + "_d_status", status_name(d.status));
}

Record to_record(const Analysis& a) {
    const AccCode& c = a.code;
    const std::size_t n = c.n();
    Record r;
    r.emplace_back("n", std::to_string(n));
    r.emplace_back("source", format_source(a.source));
    r.emplace_back("g", to_expanded_string(c.g()));
    r.emplace_back("g_factored", to_factored_string(c.g()));
    r.emplace_back("eta", format_f4_vector(c.generator_vector()));
    r.emplace_back("acc", triple(n, c.dim(), a.acc_d));
    r.emplace_back("acc_dim", std::to_string(c.dim()));
    append_distance(r, "acc", a.acc_d);
    r.emplace_back("self_orthogonal", flag(a.duality.self_orthogonal));
    r.emplace_back("dual_containing", flag(a.duality.dual_containing));
    r.emplace_back("self_dual", flag(a.duality.self_dual));
    r.emplace_back("hull_gen", to_expanded_string(hull_generator(c)));
    r.emplace_back("hull_dim", std::to_string(a.hull_dim));
    r.emplace_back("gram_rank", std::to_string(a.gram_rank));
    r.emplace_back("hull_dim_rank", std::to_string(a.hull_dim_rank));
    r.emplace_back("acd", flag(a.acd));
    r.emplace_back("acp_rank1", std::to_string(a.acp.rank1));
    r.emplace_back("acp_rank2", std::to_string(a.acp.rank2));
    r.emplace_back("acp_necessary", flag(a.acp.necessary_condition_met));
    r.emplace_back("r", to_expanded_string(a.trace.r));
    r.emplace_back("r_factored", to_factored_string(a.trace.r));
    r.emplace_back("t", to_expanded_string(a.trace.t));
    r.emplace_back("t_factored", to_factored_string(a.trace.t));
    r.emplace_back("dual_gen", to_expanded_string(a.trace.dual_gen));
    r.emplace_back("trace", triple(n, a.trace_code.dim(), a.trace_d));
    r.emplace_back("trace_dim", std::to_string(a.trace_code.dim()));
    append_distance(r, "trace", a.trace_d);
    r.emplace_back("trace_dual_dim", std::to_string(a.trace_dual_code.dim()));
    r.emplace_back("dual_gen_divides_t", flag(a.trace.dual_gen_divides_t));
    r.emplace_back("equality", flag(a.trace.equality_condition));
    r.emplace_back("strict", flag(a.trace.inclusion_strict));
    r.emplace_back("tr_subset", flag(a.tr_subset));
    r.emplace_back("trace_hull_dim", std::to_string(a.trace_hull_dim));
    r.emplace_back("r_self_reciprocal", flag(a.trace.r == poly_reciprocal(a.trace.r)));
    r.emplace_back("lcd", flag(a.trace.lcd));
    r.emplace_back("eaqec", format_brackets(a.eaqec));
    r.emplace_back("eaqec_k", std::to_string(a.eaqec.k));
    r.emplace_back("eaqec_c", std::to_string(a.eaqec.c));
    r.emplace_back("maximal", flag(is_maximal_entanglement(a.eaqec)));
    std::ostringstream rate, net;
    rate << a.eaqec.rate();
    net << a.eaqec.net_rate();
    r.emplace_back("rate", rate.str());
    r.emplace_back("net", net.str());
    return r;
}

std::string render_machine(const Record& rec) {
    std::string s;
    for (const auto& [k, v] : rec) {
        if (!s.empty()) s += ' ';
        s += k + '=' + v;
    }
    return s;
}

std::string render_human(const Analysis& a) {
    const AccCode& c = a.code;
    std::ostringstream o;
    o << "code        " << format_descriptor(a.source) << '\n'
      << "g           " << to_factored_string(c.g()) << "  (deg " << c.g().degree() << ")\n"
      << "eta_g       " << format_f4_vector(c.generator_vector()) << '\n'
      << "ACC code    " << triple(c.n(), c.dim(), a.acc_d) << "  d_G: " << to_string(a.acc_d) << '\n'
      << "duality     self-orthogonal=" << flag(a.duality.self_orthogonal)
      << " dual-containing=" << flag(a.duality.dual_containing) << " self-dual=" << flag(a.duality.self_dual)
      << '\n'
      << "hull        dim " << a.hull_dim << " via lcm(g,h*) = " << to_factored_string(hull_generator(c)) << '\n'
      << "            rank(G.G^T) = " << a.gram_rank << ", k - rank = " << a.hull_dim_rank << '\n'
      << "ACD         " << flag(a.acd) << '\n'
      << "ACP ranks   " << a.acp.rank1 << ", " << a.acp.rank2 << " (necessary condition "
      << (a.acp.necessary_condition_met ? "met" : "not met") << ")\n"
      << "trace code  " << triple(c.n(), a.trace_code.dim(), a.trace_d) << "  d_H: " << to_string(a.trace_d) << '\n'
      << "  r         " << to_factored_string(a.trace.r) << '\n'
      << "  t         " << to_factored_string(a.trace.t) << '\n'
      << "  dual_gen  " << to_factored_string(a.trace.dual_gen) << '\n'
      << "  dual_gen | t: " << flag(a.trace.dual_gen_divides_t)
      << (a.trace.equality_condition ? "  (equality: Tr(dual) = Tr(C)^perp)" : "  (strict inclusion)") << '\n'
      << "  Tr(C) in C: " << flag(a.tr_subset) << '\n'
      << "  hull dim " << a.trace_hull_dim << ", LCD " << flag(a.trace.lcd) << '\n'
      << "EAQEC       " << format_eaqec(a.eaqec) << '\n';
    return o.str();
}

}  // namespace conjucode
