#include "qse/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace qse {

namespace {

void write_value(const Json& j, std::string& out, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                write_value(it.value(), out, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                write_value(j[i], out, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();  // strings (escaped), integers, bool, null
            return;
    }
}

}  // namespace

std::string canonical_json(const Json& j) {
    std::string out;
    write_value(j, out, 0);
    out += "\n";
    return out;
}

Json certificate_json(const StabilityCertificate& cert) {
    Json j;
    j["alpha"] = cert.params.alpha;
    j["Z"] = cert.params.Z;
    j["m"] = cert.params.m;
    j["lambda"] = cert.params.lambda;
    j["N"] = cert.params.N;
    j["K"] = cert.params.K;
    j["kappa"] = cert.kappa;
    j["epsilon"] = cert.epsilon;
    j["C2"] = cert.report.C2;
    j["C3"] = cert.report.C3;
    j["term_mass"] = cert.report.term_mass;
    j["term_c3"] = cert.report.term_c3;
    j["term_coulomb"] = cert.report.term_coulomb;
    j["term_field"] = cert.report.term_field;
    j["total"] = cert.report.total;
    j["total_per_electron"] = cert.report.total_per_electron;
    j["feasible"] = cert.feasible;
    j["notes"] = Json::array(
        {"total = sqrt(epsilon)*m*N - (18*lambda/pi)*K*C2^3 at the stationary C2",
         "mass coefficient is sqrt(epsilon) by construction; at epsilon = 0.771 this is "
         "0.878, not 0.866 = sqrt(0.75); the 0.866 figure matches epsilon = 0.75"});
    return j;
}

Json verdict_json(const ModelVariant& variant, double alpha, double Z, int N, int K,
                  const Verdict& verdict) {
    Json j;
    j["projector"] =
        variant.projector == ProjectorChoice::free_projector ? "free" : "dressed";
    j["field"] = variant.field == FieldType::classical ? "classical" : "quantized";
    j["cutoff"] = variant.cutoff;
    j["coulomb"] = variant.coulomb;
    j["alpha"] = alpha;
    j["Z"] = Z;
    j["N"] = N;
    j["K"] = K;
    j["kind"] = verdict_kind_name(verdict.kind);
    j["conditions"] = verdict.conditions;
    j["citations"] = verdict.citations;
    return j;
}

Json suite_json(const SuiteResult& result) {
    Json j;
    j["name"] = result.name;
    j["trials"] = result.trials;
    j["failures"] = result.failures;
    j["skipped"] = result.skipped;
    j["max_violation"] = result.max_violation;
    j["advisory"] = result.advisory;
    j["pass"] = result.pass;
    Json metrics = Json::object();
    for (const auto& [key, value] : result.metrics) metrics[key] = value;
    j["metrics"] = metrics;
    return j;
}

}  // namespace qse
