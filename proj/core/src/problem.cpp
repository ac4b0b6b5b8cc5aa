#include "lapinit/problem.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace lapinit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::invalid_argument(path + ": " + why);
}

Rational number_at(const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    fail(path, "expected a number or \"p/q\" string");
}

std::vector<Rational> number_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    std::vector<Rational> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(number_at(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

const json& member(const json& j, const char* name, const std::string& path) {
    auto it = j.find(name);
    if (it == j.end()) fail(path, std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

Method parse_method(const std::string& name) {
    if (name == "modified-lplus") return Method::modified_lplus;
    if (name == "lminus") return Method::lminus;
    if (name == "naive-lplus") return Method::naive_lplus;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected modified-lplus, lminus or naive-lplus)");
}

ProblemFile parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("$", "expected a JSON object");

    const json& system = member(j, "system", "$");
    std::vector<Rational> a = number_list(member(system, "a", "system"), "system.a");
    std::vector<Rational> b = number_list(member(system, "b", "system"), "system.b");
    std::vector<Rational> pre = number_list(member(j, "pre_initial", "$"), "pre_initial");

    GenSignal input;
    const json& in = member(j, "input", "$");
    if (auto it = in.find("singular"); it != in.end()) {
        if (!it->is_array()) fail("input.singular", "expected an array");
        std::vector<Rational> coeffs;
        for (size_t i = 0; i < it->size(); ++i) {
            std::string path = "input.singular[" + std::to_string(i) + "]";
            const json& term = (*it)[i];
            if (!term.is_object()) fail(path, "expected {order, coeff}");
            const json& order_j = member(term, "order", path);
            if (!order_j.is_number_integer() || order_j.get<long long>() < 0)
                fail(path + ".order", "expected an integer >= 0");
            int order = order_j.get<int>();
            Rational c = number_at(member(term, "coeff", path), path + ".coeff");
            if (order >= static_cast<int>(coeffs.size())) coeffs.resize(order + 1, Rational(0));
            coeffs[order] += c;
        }
        input.singular = SingDist(std::move(coeffs));
    }
    if (auto it = in.find("regular"); it != in.end()) {
        if (!it->is_array()) fail("input.regular", "expected an array");
        for (size_t i = 0; i < it->size(); ++i) {
            std::string path = "input.regular[" + std::to_string(i) + "]";
            const json& term = (*it)[i];
            if (!term.is_object()) fail(path, "expected {coeff, power, rate_re, rate_im}");
            RegAtom atom;
            atom.coeff.re = number_at(member(term, "coeff", path), path + ".coeff");
            if (auto ci = term.find("coeff_im"); ci != term.end())
                atom.coeff.im = number_at(*ci, path + ".coeff_im");
            const json& power_j = member(term, "power", path);
            if (!power_j.is_number_integer() || power_j.get<long long>() < 0)
                fail(path + ".power", "expected an integer >= 0");
            atom.power = power_j.get<int>();
            atom.rate.re = number_at(member(term, "rate_re", path), path + ".rate_re");
            atom.rate.im = number_at(member(term, "rate_im", path), path + ".rate_im");
            input.regular.atoms.push_back(std::move(atom));
        }
    }
    if (auto it = in.find("pre_value"); it != in.end())
        input.regular.pre_value = number_at(*it, "input.pre_value");

    try {
        input.regular = reg_canonical(std::move(input.regular));
    } catch (const std::logic_error& e) {
        fail("input.regular", e.what());
    }

    ProblemFile problem;
    try {
        problem.sys = SysSpec::create(std::move(a), std::move(b), std::move(pre), std::move(input));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("system: ") + e.what());
    }

    if (auto it = j.find("options"); it != j.end()) {
        const json& opt = *it;
        if (!opt.is_object()) fail("options", "expected an object");
        if (auto f = opt.find("method"); f != opt.end()) {
            if (!f->is_string()) fail("options.method", "expected a string");
            problem.options.method = parse_method(f->get<std::string>());
        }
        if (auto f = opt.find("t_end"); f != opt.end()) {
            problem.options.t_end = to_double(number_at(*f, "options.t_end"));
            if (problem.options.t_end <= 0) fail("options.t_end", "must be positive");
        }
        if (auto f = opt.find("dt"); f != opt.end()) {
            problem.options.dt = to_double(number_at(*f, "options.dt"));
            if (problem.options.dt <= 0) fail("options.dt", "must be positive");
        }
        if (auto f = opt.find("epsilons"); f != opt.end()) {
            if (!f->is_array()) fail("options.epsilons", "expected an array");
            for (size_t i = 0; i < f->size(); ++i)
                problem.options.epsilons.push_back(
                    to_double(number_at((*f)[i], "options.epsilons[" + std::to_string(i) + "]")));
        }
        if (auto f = opt.find("out"); f != opt.end()) {
            if (!f->is_string()) fail("options.out", "expected a string");
            problem.options.out_path = f->get<std::string>();
        }
        if (auto f = opt.find("json"); f != opt.end()) {
            if (!f->is_boolean()) fail("options.json", "expected a boolean");
            problem.options.json = f->get<bool>();
        }
        if (auto f = opt.find("allow_order_two"); f != opt.end()) {
            if (!f->is_boolean()) fail("options.allow_order_two", "expected a boolean");
            problem.options.allow_order_two = f->get<bool>();
        }
    }
    return problem;
}

ProblemFile parse_problem(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open problem file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_problem_text(buffer.str());
}

std::string serialize_problem(const ProblemFile& problem) {
    json j;
    auto rational_json = [](const Rational& r) { return json(format_rational(r)); };
    auto list_json = [&](const std::vector<Rational>& v) {
        json arr = json::array();
        for (const auto& r : v) arr.push_back(rational_json(r));
        return arr;
    };

    j["system"]["a"] = list_json(problem.sys.a_original);
    j["system"]["b"] = list_json(problem.sys.b_original);
    j["pre_initial"] = list_json(problem.sys.y_pre);

    json singular = json::array();
    const SingDist& sd = problem.sys.input.singular;
    for (int k = 0; k <= sd.max_order(); ++k) {
        if (sd.coeff(k) == 0) continue;
        singular.push_back({{"order", k}, {"coeff", format_rational(sd.coeff(k))}});
    }
    json regular = json::array();
    for (const auto& atom : problem.sys.input.regular.atoms) {
        json term{{"coeff", format_rational(atom.coeff.re)},
                  {"power", atom.power},
                  {"rate_re", format_rational(atom.rate.re)},
                  {"rate_im", format_rational(atom.rate.im)}};
        if (atom.coeff.im != 0) term["coeff_im"] = format_rational(atom.coeff.im);
        regular.push_back(std::move(term));
    }
    j["input"]["singular"] = std::move(singular);
    j["input"]["regular"] = std::move(regular);
    j["input"]["pre_value"] = format_rational(problem.sys.input.regular.pre_value);

    json opt;
    opt["method"] = method_name(problem.options.method);
    if (problem.options.t_end > 0) opt["t_end"] = problem.options.t_end;
    if (problem.options.dt > 0) opt["dt"] = problem.options.dt;
    if (!problem.options.epsilons.empty()) opt["epsilons"] = problem.options.epsilons;
    if (!problem.options.out_path.empty()) opt["out"] = problem.options.out_path;
    if (problem.options.json) opt["json"] = true;
    if (problem.options.allow_order_two) opt["allow_order_two"] = true;
    j["options"] = std::move(opt);

    return j.dump(2) + "\n";
}

}  // namespace lapinit
