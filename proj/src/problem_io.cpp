#include "evfuse/problem_io.hpp"

#include "evfuse/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

namespace evfuse {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::SchemaError, where + ": " + what);
}

[[noreturn]] void validation_error(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ValidationError, where + ": " + what);
}

void require_fields(const json& obj, const std::string& where, std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional = {}) {
    if (!obj.is_object()) {
        schema_error(where, "expected an object");
    }
    for (auto key : required) {
        if (!obj.contains(key)) {
            schema_error(where, "missing field '" + std::string(key) + "'");
        }
    }
    for (const auto& [key, value] : obj.items()) {
        auto matches = [&](std::string_view k) { return k == key; };
        if (std::none_of(required.begin(), required.end(), matches) &&
            std::none_of(optional.begin(), optional.end(), matches)) {
            schema_error(where, "unknown field '" + key + "'");
        }
    }
}

const std::string& as_string(const json& v, const std::string& where) {
    if (!v.is_string()) {
        schema_error(where, "expected a string");
    }
    return v.get_ref<const std::string&>();
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) {
        schema_error(where, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        validation_error(where, "number is not finite");
    }
    return x;
}

std::vector<double> as_numbers(const json& v, std::size_t count, const std::string& where) {
    if (!v.is_array() || v.size() != count) {
        schema_error(where, "expected an array of " + std::to_string(count) + " numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(as_number(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<std::string> as_label_list(const json& v, const std::string& where) {
    if (!v.is_array()) {
        schema_error(where, "expected an array of labels");
    }
    if (v.empty()) {
        schema_error(where, "must not be empty");
    }
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string& label = as_string(v[i], where + "[" + std::to_string(i) + "]");
        if (!seen.insert(label).second) {
            validation_error(where, "duplicate label '" + label + "'");
        }
        out.push_back(label);
    }
    return out;
}

// Runs f, turning core errors into ValidationErrors that name the location.
template <typename F>
auto validated(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SchemaError || e.kind() == ErrorKind::ValidationError) {
            throw;
        }
        validation_error(where, std::string(to_string(e.kind())) + ": " + e.detail());
    }
}

class ScaleRegistry {
public:
    ScaleRegistry() {
        add(LinguisticScale::kaufmann_tfn());
        add(LinguisticScale::interval_default());
    }

    void add(const LinguisticScale& scale) {
        if (!scales_.emplace(scale.name(), scale).second) {
            validation_error("scales", "duplicate scale name '" + scale.name() + "'");
        }
    }

    const LinguisticScale& get(const std::string& name, const std::string& where) const {
        auto it = scales_.find(name);
        if (it == scales_.end()) {
            validation_error(where, "unknown scale '" + name + "'");
        }
        return it->second;
    }

private:
    std::map<std::string, LinguisticScale> scales_;
};

LinguisticScale parse_scale(const json& v, const std::string& where) {
    require_fields(v, where, {"name", "kind", "terms"});
    const std::string& name = as_string(v["name"], where + ".name");
    const std::string& kind_text = as_string(v["kind"], where + ".kind");
    ScaleKind kind;
    if (kind_text == "interval") {
        kind = ScaleKind::interval;
    } else if (kind_text == "tfn") {
        kind = ScaleKind::triangular;
    } else {
        schema_error(where + ".kind", "expected \"interval\" or \"tfn\"");
    }
    const json& terms = v["terms"];
    if (!terms.is_array() || terms.empty()) {
        schema_error(where + ".terms", "expected a non-empty array");
    }
    LinguisticScale scale(name, kind);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string at = where + ".terms[" + std::to_string(i) + "]";
        require_fields(terms[i], at, {"term", "value"});
        std::string term = as_string(terms[i]["term"], at + ".term");
        if (kind == ScaleKind::interval) {
            auto xs = as_numbers(terms[i]["value"], 2, at + ".value");
            validated(at, [&] {
                scale.add_term(term, Interval::make(xs[0], xs[1]));
                return 0;
            });
        } else {
            auto xs = as_numbers(terms[i]["value"], 3, at + ".value");
            validated(at, [&] {
                scale.add_term(term, TriangularFuzzyNumber::make(xs[0], xs[1], xs[2]));
                return 0;
            });
        }
    }
    return scale;
}

Interval parse_weight(const json& v, const std::string& where, const ScaleRegistry& scales,
                      const LoadOptions& options) {
    if (v.is_number()) {
        const double x = as_number(v, where);
        return validated(where, [&] { return crisp_to_interval(x); });
    }
    if (v.is_array()) {
        auto xs = as_numbers(v, 2, where);
        Interval w = validated(where, [&] { return Interval::make(xs[0], xs[1]); });
        if (w.lo() < 0.0) {
            validation_error(where, "weights must be non-negative");
        }
        return w;
    }
    if (v.is_object()) {
        require_fields(v, where, {"term", "scale"});
        const std::string& term = as_string(v["term"], where + ".term");
        const LinguisticScale& scale = scales.get(as_string(v["scale"], where + ".scale"), where + ".scale");
        Interval w = validated(where, [&] { return scale.to_interval(term, options.alpha); });
        if (w.lo() < 0.0) {
            validation_error(where, "weights must be non-negative");
        }
        return w;
    }
    schema_error(where, "weight must be [lo, hi], a number, or {\"term\", \"scale\"}");
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) {
        schema_error(where, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(where, "missing entry '" + key + "'");
    }
    return *it;
}

void reject_unknown_keys(const json& obj, const std::vector<std::string>& known, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            schema_error(where, "unknown entry '" + key + "'");
        }
    }
}

// (line, column), both 1-based, of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(byte, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // nlohmann reports the 1-based index of the offending byte.
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, column] = locate(text, offset);
        std::string what = e.what();
        if (auto pos = what.find("parse error"); pos != std::string::npos) {
            what = what.substr(pos);
        }
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

DecisionProblem interpret(const json& doc, const LoadOptions& options) {
    require_fields(doc, "document", {"schema_version", "alternatives", "criteria", "decision_makers", "ratings"},
                   {"frame", "scales", "description"});
    if (as_string(doc["schema_version"], "schema_version") != kSchemaVersion) {
        schema_error("schema_version", "unsupported version, expected \"" + std::string(kSchemaVersion) + "\"");
    }
    if (doc.contains("description")) {
        as_string(doc["description"], "description");
    }
    if (doc.contains("frame")) {
        auto labels = as_label_list(doc["frame"], "frame");
        if (labels != Frame::binary().labels()) {
            schema_error("frame", "only the [\"IS\", \"NS\"] frame is supported");
        }
    }

    ScaleRegistry scales;
    if (doc.contains("scales")) {
        const json& list = doc["scales"];
        if (!list.is_array()) {
            schema_error("scales", "expected an array");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            scales.add(parse_scale(list[i], "scales[" + std::to_string(i) + "]"));
        }
    }

    DecisionProblem p;
    p.alternatives = as_label_list(doc["alternatives"], "alternatives");
    p.criteria = as_label_list(doc["criteria"], "criteria");

    const json& dms = doc["decision_makers"];
    if (!dms.is_array()) {
        schema_error("decision_makers", "expected an array");
    }
    if (dms.empty()) {
        schema_error("decision_makers", "must not be empty");
    }
    std::vector<std::string> dm_labels;
    for (std::size_t d = 0; d < dms.size(); ++d) {
        const std::string where = "decision_makers[" + std::to_string(d) + "]";
        require_fields(dms[d], where, {"label", "weight", "criterion_weights"});
        std::string label = as_string(dms[d]["label"], where + ".label");
        if (std::find(dm_labels.begin(), dm_labels.end(), label) != dm_labels.end()) {
            validation_error(where + ".label", "duplicate decision maker '" + label + "'");
        }
        dm_labels.push_back(label);
        const std::string named = "decision maker '" + label + "'";
        Interval weight = parse_weight(dms[d]["weight"], named + " weight", scales, options);

        const json& cw = dms[d]["criterion_weights"];
        if (!cw.is_object()) {
            schema_error(named + " criterion_weights", "expected an object keyed by criterion");
        }
        reject_unknown_keys(cw, p.criteria, named + " criterion_weights");
        std::vector<Interval> weights;
        for (const auto& c : p.criteria) {
            weights.push_back(parse_weight(member(cw, c, named + " criterion_weights"),
                                           named + ", criterion '" + c + "' weight", scales, options));
        }
        p.decision_makers.push_back({label, weight});
        p.criterion_weights.push_back(std::move(weights));
    }

    const json& ratings = doc["ratings"];
    if (!ratings.is_object()) {
        schema_error("ratings", "expected an object keyed by decision maker");
    }
    reject_unknown_keys(ratings, dm_labels, "ratings");
    for (const auto& dm : dm_labels) {
        const json& by_alt = member(ratings, dm, "ratings");
        const std::string dm_where = "ratings['" + dm + "']";
        if (!by_alt.is_object()) {
            schema_error(dm_where, "expected an object keyed by alternative");
        }
        reject_unknown_keys(by_alt, p.alternatives, dm_where);
        std::vector<std::vector<MassFunction>> rows;
        for (const auto& alt : p.alternatives) {
            const json& by_crit = member(by_alt, alt, dm_where);
            const std::string alt_where = dm_where + "['" + alt + "']";
            if (!by_crit.is_object()) {
                schema_error(alt_where, "expected an object keyed by criterion");
            }
            reject_unknown_keys(by_crit, p.criteria, alt_where);
            std::vector<MassFunction> row;
            for (const auto& c : p.criteria) {
                const std::string cell = "decision maker '" + dm + "', alternative '" + alt + "', criterion '" + c + "'";
                auto m = as_numbers(member(by_crit, c, alt_where), 3, cell);
                row.push_back(validated(cell, [&] {
                    return binary_mass(m[0], m[1], m[2], options.rating_sum_tolerance);
                }));
            }
            rows.push_back(std::move(row));
        }
        p.ratings.push_back(std::move(rows));
    }

    validated("problem", [&] {
        p.validate();
        return 0;
    });
    return p;
}

} // namespace

DecisionProblem load_problem(std::string_view text, const LoadOptions& options) {
    const json doc = parse_json(text);
    try {
        return interpret(doc, options);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::SchemaError, e.what());
    }
}

DecisionProblem load_problem(std::istream& in, InputFormat format, const LoadOptions& options) {
    switch (format) {
    case InputFormat::json:
        break;
    }
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return load_problem(std::string_view(text), options);
}

DecisionProblem load_problem_file(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
    }
    return load_problem(in, InputFormat::json, options);
}

} // namespace evfuse
