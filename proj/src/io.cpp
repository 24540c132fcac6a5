#include "ri/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ri {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

SpacePtr space_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.contains("atoms") || !j.contains("masses"))
        throw std::runtime_error(field + ": needs atoms and masses arrays");
    auto atoms = j.at("atoms").get<std::vector<std::string>>();
    auto masses = j.at("masses").get<std::vector<double>>();
    return AtomicMeasureSpace::make(std::move(atoms), std::move(masses));
}

nlohmann::json space_to_json(const SpacePtr& s) {
    return {{"atoms", s->atoms()}, {"masses", s->masses()}};
}

}  // namespace

AtomicFunction read_function_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) !=
                                       std::vector<std::string>{"atom", "mass", "value"})
        throw std::runtime_error(path + ": expected header atom,mass,value");
    std::vector<std::string> atoms;
    std::vector<double> masses, values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 3) throw std::runtime_error(path + ": malformed row " + line);
        atoms.push_back(cells[0]);
        masses.push_back(std::stod(cells[1]));
        values.push_back(std::stod(cells[2]));
    }
    return {AtomicMeasureSpace::make(std::move(atoms), std::move(masses)), std::move(values)};
}

void write_function_csv(const std::string& path, const AtomicFunction& f) {
    std::ofstream out = open_out(path);
    out.precision(17);
    out << "atom,mass,value\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        out << f.space->atoms()[i] << ',' << f.space->mass(i) << ',' << f.values[i] << '\n';
}

ProductFunction read_product_csv(const std::string& path) {
    nlohmann::json sidecar;
    open_in(path + ".spaces.json") >> sidecar;
    const SpacePtr s1 = space_from_json(sidecar.at("space1"), "space1");
    const SpacePtr s2 = space_from_json(sidecar.at("space2"), "space2");

    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) !=
                                       std::vector<std::string>{"atom1", "atom2", "value"})
        throw std::runtime_error(path + ": expected header atom1,atom2,value");
    std::vector<double> values(s1->size() * s2->size(), 0.0);
    const auto index_of = [](const SpacePtr& s, const std::string& name) {
        for (std::size_t i = 0; i < s->size(); ++i)
            if (s->atoms()[i] == name) return i;
        throw std::runtime_error("unknown atom " + name);
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 3) throw std::runtime_error(path + ": malformed row " + line);
        values[index_of(s1, cells[0]) * s2->size() + index_of(s2, cells[1])] =
            std::stod(cells[2]);
    }
    return {s1, s2, std::move(values)};
}

void write_product_csv(const std::string& path, const ProductFunction& f) {
    {
        std::ofstream meta = open_out(path + ".spaces.json");
        meta << nlohmann::json{{"space1", space_to_json(f.space1())},
                               {"space2", space_to_json(f.space2())}}
                    .dump(2)
             << '\n';
    }
    std::ofstream out = open_out(path);
    out.precision(17);
    out << "atom1,atom2,value\n";
    for (std::size_t i = 0; i < f.space1()->size(); ++i)
        for (std::size_t j = 0; j < f.space2()->size(); ++j)
            out << f.space1()->atoms()[i] << ',' << f.space2()->atoms()[j] << ','
                << f.at(i, j) << '\n';
}

Action system_from_json(const nlohmann::json& j) {
    if (!j.contains("space")) throw std::runtime_error("system config: missing space");
    const SpacePtr space = space_from_json(j.at("space"), "space");
    if (!j.contains("generator")) throw std::runtime_error("system config: missing generator");
    auto gen = j.at("generator").get<std::vector<std::size_t>>();
    GroupModel group = GroupModel::integers();
    if (j.contains("group")) {
        const auto& g = j.at("group");
        if (g.is_string() && g.get<std::string>() == "integers")
            group = GroupModel::integers();
        else if (g.is_object() && g.contains("cyclic"))
            group = GroupModel::cyclic_group(g.at("cyclic").get<long long>());
        else
            throw std::runtime_error("system config: group must be \"integers\" or {\"cyclic\": N}");
    }
    return {space, std::move(gen), group};
}

Action read_system_json(const std::string& path) {
    nlohmann::json j;
    open_in(path) >> j;
    return system_from_json(j);
}

Kernel kernel_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_kernel(j.get<std::string>());
    if (!j.contains("support") || !j.contains("weights"))
        throw std::runtime_error("kernel: needs support and weights arrays");
    auto support = j.at("support").get<std::vector<long long>>();
    auto weights = j.at("weights").get<std::vector<double>>();
    if (support.size() != weights.size() || support.empty())
        throw std::runtime_error("kernel: support/weights size mismatch");
    std::vector<std::size_t> order(support.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
    Kernel k;
    for (std::size_t i : order) {
        if (!k.support.empty() && k.support.back() == support[i])
            throw std::runtime_error("kernel: duplicate support point");
        k.support.push_back(support[i]);
        k.weights.push_back(weights[i]);
    }
    return k;
}

nlohmann::json profile_to_json(const StepProfile& p) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : p.steps())
        steps.push_back({{"value", st.value}, {"width", st.width}, {"cum", st.cum}});
    return {{"steps", steps}, {"total_width", p.total_width()}};
}

nlohmann::json certificate_to_json(const GrowthCertificate& cert) {
    nlohmann::json j{{"condition", to_string(cert.condition)},
                     {"subject", cert.subject},
                     {"young_form", cert.young_form},
                     {"pass", cert.pass},
                     {"worst_margin", cert.worst_margin},
                     {"grid", {{"lo", cert.grid.lo},
                               {"hi", cert.grid.hi},
                               {"per_decade", cert.grid.per_decade}}}};
    switch (cert.condition) {
        case GrowthCondition::delta2:
        case GrowthCondition::delta_prime:
            j["K"] = cert.K;
            break;
        case GrowthCondition::nabla2:
            j["ell"] = cert.ell;
            break;
        case GrowthCondition::u_class:
        case GrowthCondition::l_class:
            j["A"] = cert.A;
            j["alpha"] = cert.alpha;
            j["delta"] = cert.delta;
            break;
    }
    return j;
}

nlohmann::json zippin_to_json(const ZippinReport& rep) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& [t, m] : rep.samples) samples.push_back({{"t", t}, {"M", m}});
    return {{"beta_lower", rep.beta_lower},
            {"beta_upper", rep.beta_upper},
            {"submultiplicative", rep.submultiplicative},
            {"samples", samples}};
}

void write_jsonl(const std::string& path, const std::vector<CheckRecord>& records) {
    std::ofstream out = open_out(path);
    for (const CheckRecord& rec : records) out << rec.to_json().dump() << '\n';
}

}  // namespace ri
