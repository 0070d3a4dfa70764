#include "jobconfig.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace slhelix::cli {

using ojson = nlohmann::ordered_json;

XiFn parse_xifn(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad function spec '" + spec +
                                    "': expected kind:params");
    std::string kind = spec.substr(0, colon);
    std::vector<double> vals;
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) vals.push_back(std::stod(item));

    if (kind == "const") {
        if (vals.size() != 1) throw std::invalid_argument("const: needs one value");
        return XiFn::constant(vals[0]);
    }
    if (kind == "poly") {
        if (vals.empty()) throw std::invalid_argument("poly: needs coefficients");
        return XiFn::polynomial(vals);
    }
    if (kind == "sin") {
        if (vals.size() != 4)
            throw std::invalid_argument("sin: needs a,b,c,d for a*sin(b v + c) + d");
        return XiFn::sinusoid(vals[0], vals[1], vals[2], vals[3]);
    }
    throw std::invalid_argument("unknown function kind '" + kind + "'");
}

std::string xifn_to_string(const XiFn& f) {
    std::ostringstream os;
    os.precision(17);
    const auto& c = f.coeffs();
    switch (f.kind()) {
        case XiFn::Kind::Constant:
            os << "const:" << c[0];
            break;
        case XiFn::Kind::Polynomial:
            os << "poly:";
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
            break;
        case XiFn::Kind::Sinusoid:
            os << "sin:" << c[0] << "," << c[1] << "," << c[2] << "," << c[3];
            break;
        case XiFn::Kind::Sampled:
            throw std::invalid_argument("sampled functions have no flag syntax");
    }
    return os.str();
}

namespace {

ojson xifn_to_json(const XiFn& f) {
    switch (f.kind()) {
        case XiFn::Kind::Constant: return {{"kind", "const"}, {"value", f.coeffs()[0]}};
        case XiFn::Kind::Polynomial: return {{"kind", "poly"}, {"coeffs", f.coeffs()}};
        case XiFn::Kind::Sinusoid: {
            const auto& c = f.coeffs();
            return {{"kind", "sin"}, {"a", c[0]}, {"b", c[1]}, {"c", c[2]}, {"d", c[3]}};
        }
        default:
            throw std::invalid_argument("sampled functions are not serializable");
    }
}

XiFn xifn_from_json(const ojson& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "const") return XiFn::constant(j.at("value").get<double>());
    if (kind == "poly") return XiFn::polynomial(j.at("coeffs").get<std::vector<double>>());
    if (kind == "sin")
        return XiFn::sinusoid(j.at("a").get<double>(), j.at("b").get<double>(),
                              j.at("c").get<double>(), j.at("d").get<double>());
    throw std::invalid_argument("unknown function kind '" + kind + "'");
}

} // namespace

JobConfig JobConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

JobConfig JobConfig::from_json_text(const std::string& text) {
    ojson j = ojson::parse(text);
    JobConfig c;
    c.command = j.value("command", "");
    c.tau = j.at("tau").get<double>();
    if (j.contains("theta")) c.theta = j["theta"].get<double>();
    if (j.contains("cos_theta")) c.cos_theta = j["cos_theta"].get<double>();
    if (j.contains("case")) c.case_override = j["case"].get<std::string>();
    if (j.contains("xi")) c.xi = xifn_from_json(j["xi"]);
    if (j.contains("xi1")) c.xi1 = xifn_from_json(j["xi1"]);
    if (j.contains("xi3")) c.xi3 = xifn_from_json(j["xi3"]);
    if (j.contains("xi2")) {
        const ojson& x = j["xi2"];
        if (x.at("kind") == "solve") {
            c.xi2.solve = true;
            c.xi2.init = x.value("init", 0.0);
        } else {
            c.xi2.solve = false;
            c.xi2.explicit_fn = xifn_from_json(x);
        }
    }
    if (j.contains("u_range")) {
        c.u_min = j["u_range"][0].get<double>();
        c.u_max = j["u_range"][1].get<double>();
    }
    if (j.contains("v_range")) {
        c.v_min = j["v_range"][0].get<double>();
        c.v_max = j["v_range"][1].get<double>();
    }
    if (j.contains("grid")) {
        c.nu = j["grid"][0].get<int>();
        c.nv = j["grid"][1].get<int>();
    }
    c.out_path = j.value("out", "");
    c.report_path = j.value("report", "");
    c.tol_scale = j.value("tol_scale", 1.0);
    return c;
}

std::string JobConfig::to_json() const {
    ojson j;
    j["command"] = command;
    j["tau"] = tau;
    if (theta) j["theta"] = *theta;
    if (cos_theta) j["cos_theta"] = *cos_theta;
    if (case_override) j["case"] = *case_override;
    j["xi"] = xifn_to_json(xi);
    j["xi1"] = xifn_to_json(xi1);
    if (xi2.solve)
        j["xi2"] = {{"kind", "solve"}, {"init", xi2.init}};
    else
        j["xi2"] = xifn_to_json(*xi2.explicit_fn);
    j["xi3"] = xifn_to_json(xi3);
    j["u_range"] = {u_min, u_max};
    j["v_range"] = {v_min, v_max};
    j["grid"] = {nu, nv};
    if (!out_path.empty()) j["out"] = out_path;
    if (!report_path.empty()) j["report"] = report_path;
    j["tol_scale"] = tol_scale;
    return j.dump(2);
}

ModelParams JobConfig::resolve_params() const {
    const bool b0_case = case_override && *case_override == "b0";
    if (theta && cos_theta)
        throw std::invalid_argument("give either theta or cos_theta, not both");
    if (b0_case) {
        if (theta || cos_theta)
            throw std::invalid_argument(
                "case b0 fixes the angle from tau; omit theta/cos_theta");
        return case_params_b0(tau);
    }
    ModelParams P = theta ? case_params(tau, *theta)
                  : cos_theta ? case_params_from_cos(tau, *cos_theta)
                  : case_params_b0(tau);
    if (!theta && !cos_theta && !case_override)
        throw std::invalid_argument("give theta, cos_theta, or --case b0");
    if (case_override && *case_override != case_name(P.tag))
        throw std::invalid_argument(std::string("case mismatch: parameters give ") +
                                    case_name(P.tag) + ", config says " + *case_override);
    return P;
}

HelixSurface JobConfig::build_surface() const {
    ModelParams P = resolve_params();
    Domain dom{u_min, u_max, v_min, v_max};
    if (xi2.solve) {
        VGrid grid{v_min, v_max, 1001};
        IsometryFamily fam = solve_admissible(P.tag, P, xi, xi1, xi3, xi2.init, grid);
        return HelixSurface(P, std::move(fam), dom);
    }
    XiSpec spec;
    spec.xi = xi;
    spec.xi1 = xi1;
    spec.xi2 = *xi2.explicit_fn;
    spec.xi3 = xi3;
    spec.v_min = v_min;
    spec.v_max = v_max;
    return HelixSurface(P, IsometryFamily(std::move(spec), P.tag), dom);
}

bool operator==(const JobConfig& a, const JobConfig& b) {
    return a.to_json() == b.to_json();
}

} // namespace slhelix::cli
