// Command-line front end: every operation of the library behind one binary
// with deterministic CSV/JSON emission.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satotate/beurling.hpp"
#include "satotate/classnumber.hpp"
#include "satotate/curves.hpp"
#include "satotate/ff.hpp"
#include "satotate/io.hpp"
#include "satotate/modforms.hpp"
#include "satotate/satotate.hpp"
#include "satotate/traceformula.hpp"

using namespace satotate;

namespace {

int env_threads() {
    const char* s = std::getenv("SATOTATE_THREADS");
    if (!s) return 1;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    return (end != s && v >= 1) ? int(v) : 1;
}

struct Opts {
    std::string format = "csv";
    std::string output = "-";
    int threads = 1;
    std::string mode = "auto";

    int64_t p = 0;
    int r = 1;
    int64_t q = 0;  // optional cross-check of p^r
    std::vector<double> interval;
    double alpha = 0.0;
    double beta = 0.0;
    int k = 0;
    int64_t n = 0;
    int64_t N = 0;
    int M = 0;
    int R = 1;
    std::string sign = "plus";
    int kmax = 30;
    int64_t qmax = 49;
    int64_t pmax = 97;
    int cells = 16;
    std::vector<int64_t> q_list;
};

void emit(const Table& t, const Opts& o) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (o.output != "-") {
        file.open(o.output);
        if (!file) throw std::invalid_argument("cannot open output path: " + o.output);
        os = &file;
    }
    if (o.format == "json")
        write_json(t, *os);
    else
        write_csv(t, *os);
}

FieldContext field_from(const Opts& o) {
    FieldContext K = make_field(o.p, o.r);
    if (o.q != 0 && o.q != K.q)
        throw std::invalid_argument("inconsistent p/r/q: p^r = " + std::to_string(K.q));
    return K;
}

HistogramMode mode_for(const Opts& o, int64_t q) {
    if (o.mode == "brute") return HistogramMode::brute;
    if (o.mode == "orbit") return HistogramMode::orbit;
    return q <= 200 ? HistogramMode::brute : HistogramMode::orbit;
}

AngleInterval interval_from(const Opts& o) {
    if (o.interval.size() != 2) throw std::invalid_argument("--interval needs two radians");
    AngleInterval I{o.interval[0], o.interval[1]};
    validate_angle_interval(I);
    return I;
}

std::string rat_str(const BigRational& x) {
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

std::vector<int64_t> prime_powers_up_to(int64_t qmax) {
    std::vector<int64_t> qs;
    for (int64_t q = 5; q <= qmax; ++q) {
        try {
            auto [p, r] = factor_prime_power(q);
            (void)r;
            if (p >= 5) qs.push_back(q);
        } catch (const std::invalid_argument&) {
        }
    }
    return qs;
}

int run_count(const Opts& o) {
    FieldContext K = field_from(o);
    AngleInterval I = interval_from(o);
    int64_t n = count_NI(K, I, mode_for(o, K.q), o.threads);
    Table t;
    t.columns = {"q", "alpha", "beta", "N_I"};
    t.rows.push_back({K.q, I.alpha, I.beta, n});
    emit(t, o);
    return 0;
}

int run_histogram(const Opts& o) {
    FieldContext K = field_from(o);
    TraceHistogram h = trace_histogram(K, mode_for(o, K.q), o.threads);
    Table t;
    t.columns = {"q", "t", "count"};
    for (int64_t tr = -h.tmax; tr <= h.tmax; ++tr)
        t.rows.push_back({h.q, tr, h.count(tr)});
    emit(t, o);
    return 0;
}

int run_classnum(const Opts& o) {
    HurwitzValue H = hurwitz(o.N);
    int64_t forms = o.N > 0 ? int64_t(reduced_forms(o.N).size()) : 0;
    Table t;
    t.columns = {"N", "twelve_H", "form_count"};
    t.rows.push_back({H.N, H.twelve_H, forms});
    emit(t, o);
    return 0;
}

int run_trace_es(const Opts& o) {
    int64_t q = o.q != 0 ? o.q : field_from(o).q;
    ESBreakdown es = trace_tk_es(o.k, q);
    Table t;
    t.columns = {"k", "q", "square_term", "elliptic_term", "divisor_term", "total"};
    t.rows.push_back({int64_t(es.k), es.q, rat_str(es.square_term), rat_str(es.elliptic_term),
                      rat_str(es.divisor_term), es.total});
    emit(t, o);
    return 0;
}

int run_trace_mf(const Opts& o) {
    BigInt tr = trace_tk_mf(o.k, o.n);
    Table t;
    t.columns = {"k", "n", "trace"};
    t.rows.push_back({int64_t(o.k), o.n, tr});
    emit(t, o);
    return 0;
}

int run_verify_es(const Opts& o) {
    std::vector<int64_t> qs = prime_powers_up_to(o.qmax);
    Table t;
    t.columns = {"k", "q", "es_total", "mf_total", "match"};
    bool all = true;
    for (int k = 4; k <= o.kmax; k += 2) {
        int dim = dim_sk(k);
        CuspBasis basis = miller_basis(k, size_t(dim) * size_t(o.qmax) + size_t(dim) + 1);
        for (int64_t q : qs) {
            BigInt es = trace_tk_es(k, q).total;
            BigInt mf = trace_tk_mf(basis, q);
            bool match = (es == mf);
            all = all && match;
            t.rows.push_back({int64_t(k), q, es, mf, match});
        }
    }
    emit(t, o);
    return all ? 0 : 1;
}

int run_verify_deuring(const Opts& o) {
    std::vector<FieldContext> fields;
    if (o.p != 0) {
        fields.push_back(field_from(o));
    } else {
        for (int64_t p = 5; p <= o.pmax; ++p)
            if (is_prime(p)) fields.push_back(make_field(p, 1));
    }
    Table t;
    t.columns = {"q", "t", "count", "twelve_h", "expected", "asserted", "pass"};
    bool all = true;
    for (const FieldContext& K : fields) {
        DeuringReport rep = verify_deuring(K, o.threads);
        all = all && rep.all_pass;
        for (const DeuringRow& row : rep.rows)
            t.rows.push_back({rep.q, row.t, row.count, row.twelve_h,
                              double(K.q - 1) * double(row.twelve_h) / 24.0, row.asserted,
                              row.pass});
    }
    emit(t, o);
    return all ? 0 : 1;
}

int run_bs_coeffs(const Opts& o) {
    IntervalJ J{o.alpha, o.beta};
    SelbergPolynomial S =
        selberg(J, o.M, o.sign == "minus" ? SelbergSign::minorant : SelbergSign::majorant);
    Table t;
    t.columns = {"m", "re", "im"};
    for (int m = -o.M; m <= o.M; ++m)
        t.rows.push_back({int64_t(m), S.coeff(m).real(), S.coeff(m).imag()});
    emit(t, o);
    return 0;
}

int run_discrepancy(const Opts& o) {
    if (o.q_list.empty()) throw std::invalid_argument("discrepancy needs at least one --q");
    std::vector<FieldContext> fields;
    for (int64_t q : o.q_list) {
        auto [p, r] = factor_prime_power(q);
        fields.push_back(make_field(p, r));
    }
    HistogramMode mode = o.mode == "brute" ? HistogramMode::brute : HistogramMode::orbit;
    std::vector<DiscrepancyRow> rows =
        discrepancy_table(fields, uniform_grid(o.cells), mode, o.threads);
    Table t;
    t.columns = {"q", "alpha", "beta", "N_I", "main", "diff", "normalized"};
    for (const DiscrepancyRow& r : rows)
        t.rows.push_back({r.q, r.alpha, r.beta, r.n_i, r.main, r.diff, r.normalized});
    emit(t, o);
    return 0;
}

int run_sandwich(const Opts& o) {
    FieldContext K = field_from(o);
    AngleInterval I = interval_from(o);
    int M = o.M > 0 ? o.M : default_sandwich_degree(K.q);
    TraceHistogram h = trace_histogram(K, mode_for(o, K.q), o.threads);
    SandwichBounds sb = sandwich(h, I, M);
    int64_t n = count_NI(h, I);
    Table t;
    t.columns = {"q", "alpha", "beta", "M", "lower", "N_I", "upper"};
    t.rows.push_back({K.q, I.alpha, I.beta, int64_t(M), sb.lower, n, sb.upper});
    emit(t, o);
    return 0;
}

int run_moments(const Opts& o) {
    FieldContext K = field_from(o);
    MomentResult m = moment_sum(K, o.R, o.threads);
    Table t;
    t.columns = {"q", "R", "value", "predicted", "ratio"};
    t.rows.push_back({K.q, int64_t(o.R), m.value, m.predicted, m.ratio});
    emit(t, o);
    return 0;
}

void add_common(CLI::App* sub, Opts& o) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", o.output, "output path, - for stdout");
    sub->add_option("--threads", o.threads, "worker threads (default SATOTATE_THREADS or 1)");
}

void add_field(CLI::App* sub, Opts& o, bool required = true) {
    auto* p = sub->add_option("--p", o.p, "field characteristic, prime >= 5");
    if (required) p->required();
    sub->add_option("--r", o.r, "extension degree");
    sub->add_option("--q", o.q, "optional cross-check, must equal p^r");
}

void add_mode(CLI::App* sub, Opts& o) {
    sub->add_option("--mode", o.mode, "histogram mode")
        ->check(CLI::IsMember({"auto", "brute", "orbit"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sato-Tate laboratory for y^2 = x^3 + ax + b over F_q"};
    app.require_subcommand(1);

    Opts o;
    o.threads = env_threads();
    int exit_code = 0;

    auto* count = app.add_subcommand("count", "N_I over a closed angle interval; emits q,alpha,beta,N_I");
    add_field(count, o);
    count->add_option("--interval", o.interval, "alpha beta in radians")->expected(2)->required();
    add_mode(count, o);
    add_common(count, o);
    count->callback([&] { exit_code = run_count(o); });

    auto* hist = app.add_subcommand("histogram", "trace-of-Frobenius histogram; emits q,t,count");
    add_field(hist, o);
    add_mode(hist, o);
    add_common(hist, o);
    hist->callback([&] { exit_code = run_histogram(o); });

    auto* cls = app.add_subcommand("classnum", "Hurwitz class number; emits N,twelve_H,form_count");
    cls->add_option("--n", o.N, "discriminant argument N (H of -N)")->required();
    add_common(cls, o);
    cls->callback([&] { exit_code = run_classnum(o); });

    auto* tes = app.add_subcommand("trace-es",
                                   "Eichler-Selberg trace; emits k,q,square_term,elliptic_term,divisor_term,total");
    tes->add_option("--k", o.k, "even weight >= 4")->required();
    add_field(tes, o, false);
    add_common(tes, o);
    tes->callback([&] { exit_code = run_trace_es(o); });

    auto* tmf = app.add_subcommand("trace-mf", "modular-forms trace oracle; emits k,n,trace");
    tmf->add_option("--k", o.k, "even weight >= 4")->required();
    tmf->add_option("--n", o.n, "Hecke index")->required();
    add_common(tmf, o);
    tmf->callback([&] { exit_code = run_trace_mf(o); });

    auto* ves = app.add_subcommand("verify-es",
                                   "cross-check trace formula against the oracle; emits k,q,es_total,mf_total,match");
    ves->add_option("--kmax", o.kmax, "largest weight");
    ves->add_option("--qmax", o.qmax, "largest prime power");
    add_common(ves, o);
    ves->callback([&] { exit_code = run_verify_es(o); });

    auto* vd = app.add_subcommand("verify-deuring",
                                  "histogram vs class-number counts; emits q,t,count,twelve_h,expected,asserted,pass");
    vd->add_option("--pmax", o.pmax, "largest prime of the sweep");
    add_field(vd, o, false);
    add_common(vd, o);
    vd->callback([&] { exit_code = run_verify_deuring(o); });

    auto* bs = app.add_subcommand("bs-coeffs", "Selberg polynomial coefficients; emits m,re,im");
    bs->add_option("--alpha", o.alpha, "left endpoint in [0,1)")->required();
    bs->add_option("--beta", o.beta, "right endpoint in (alpha,1]")->required();
    bs->add_option("--M", o.M, "degree bound")->required();
    bs->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    add_common(bs, o);
    bs->callback([&] { exit_code = run_bs_coeffs(o); });

    auto* disc = app.add_subcommand("discrepancy",
                                    "half-open grid rows; emits q,alpha,beta,N_I,main,diff,normalized");
    disc->add_option("--q", o.q_list, "prime power, repeatable")->required();
    disc->add_option("--cells", o.cells, "grid cells over [0,pi]");
    add_mode(disc, o);
    add_common(disc, o);
    disc->callback([&] { exit_code = run_discrepancy(o); });

    auto* sw = app.add_subcommand("sandwich",
                                  "Beurling-Selberg bounds; emits q,alpha,beta,M,lower,N_I,upper");
    add_field(sw, o);
    sw->add_option("--interval", o.interval, "alpha beta in radians")->expected(2)->required();
    sw->add_option("--M", o.M, "degree bound, 0 = floor(q^(1/4))");
    add_mode(sw, o);
    add_common(sw, o);
    sw->callback([&] { exit_code = run_sandwich(o); });

    auto* mom = app.add_subcommand("moments",
                                   "Birch moment over all pairs; emits q,R,value,predicted,ratio");
    add_field(mom, o);
    mom->add_option("--R", o.R, "half the moment exponent")->required();
    add_common(mom, o);
    mom->callback([&] { exit_code = run_moments(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
