#include "cdk/cloud_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace cdk {

namespace {

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trimmed(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

double parse_number(const std::string& cell, std::size_t line_no, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size())
            throw validation_error("line " + std::to_string(line_no) + ": trailing characters in " +
                                   what + " '" + cell + "'");
        return v;
    } catch (const validation_error&) {
        throw;
    } catch (const std::exception&) {
        throw validation_error("line " + std::to_string(line_no) + ": cannot parse " + what +
                               " '" + cell + "'");
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

DiscreteMeasure parse_cloud_csv(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    std::size_t line_no = 0;

    int d = -1;
    bool has_weight = false;
    std::vector<std::vector<double>> rows;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trimmed(line);
        if (line.empty()) continue;

        const auto cells = split_csv(line);
        if (d < 0) {
            // Header: re1,im1,...,red,imd with optional trailing weight.
            std::size_t coords = cells.size();
            if (!cells.empty() && cells.back() == "weight") {
                has_weight = true;
                --coords;
            }
            if (coords == 0 || coords % 2 != 0)
                throw validation_error("line " + std::to_string(line_no) +
                                       ": header needs re/im column pairs, got " +
                                       std::to_string(coords) + " coordinate columns");
            d = static_cast<int>(coords / 2);
            for (std::size_t k = 0; k < coords; k += 2) {
                const std::string idx = std::to_string(k / 2 + 1);
                if (cells[k] != "re" + idx || cells[k + 1] != "im" + idx)
                    throw validation_error("line " + std::to_string(line_no) +
                                           ": expected header columns re" + idx + ",im" + idx +
                                           " but found '" + cells[k] + "," + cells[k + 1] + "'");
            }
            continue;
        }

        const std::size_t expect = static_cast<std::size_t>(2 * d) + (has_weight ? 1 : 0);
        if (cells.size() != expect)
            throw validation_error("line " + std::to_string(line_no) + ": expected " +
                                   std::to_string(expect) + " fields, got " +
                                   std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k)
            row.push_back(parse_number(cells[k], line_no,
                                       k < static_cast<std::size_t>(2 * d) ? "coordinate" : "weight"));
        rows.push_back(std::move(row));
    }
    if (d < 0) throw validation_error("cloud file has no header line");
    if (rows.empty()) throw validation_error("cloud file has no data rows");

    DiscreteMeasure m;
    const auto n = static_cast<Eigen::Index>(rows.size());
    m.atoms.resize(n, d);
    m.weights.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (int k = 0; k < d; ++k)
            m.atoms(i, k) = std::complex<double>(rows[static_cast<std::size_t>(i)][2 * k],
                                                 rows[static_cast<std::size_t>(i)][2 * k + 1]);
        m.weights[i] = has_weight ? rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * d)]
                                  : 1.0 / static_cast<double>(n);
    }
    m.validate();
    return m;
}

std::string format_cloud_csv(const DiscreteMeasure& measure) {
    std::string out;
    for (int k = 1; k <= measure.dim(); ++k) {
        if (k > 1) out += ',';
        out += "re" + std::to_string(k) + ",im" + std::to_string(k);
    }
    out += ",weight\n";
    for (Eigen::Index i = 0; i < measure.size(); ++i) {
        for (int k = 0; k < measure.dim(); ++k) {
            if (k > 0) out += ',';
            out += format_double(measure.atoms(i, k).real());
            out += ',';
            out += format_double(measure.atoms(i, k).imag());
        }
        out += ',';
        out += format_double(measure.weights[i]);
        out += '\n';
    }
    return out;
}

DiscreteMeasure parse_cloud_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("cloud JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("d") || !j.contains("atoms"))
        throw validation_error("cloud JSON needs fields 'd' and 'atoms'");
    const int d = j.at("d").get<int>();
    if (d < 1) throw validation_error("cloud JSON field 'd' must be >= 1");
    const auto& atoms = j.at("atoms");
    if (!atoms.is_array() || atoms.empty())
        throw validation_error("cloud JSON field 'atoms' must be a non-empty array");

    DiscreteMeasure m;
    const auto n = static_cast<Eigen::Index>(atoms.size());
    m.atoms.resize(n, d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = atoms[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(2 * d))
            throw validation_error("cloud JSON atom " + std::to_string(i) + " needs " +
                                   std::to_string(2 * d) + " numbers (re, im pairs)");
        for (int k = 0; k < d; ++k)
            m.atoms(i, k) =
                std::complex<double>(row[static_cast<std::size_t>(2 * k)].get<double>(),
                                     row[static_cast<std::size_t>(2 * k + 1)].get<double>());
    }
    if (j.contains("weights") && !j.at("weights").is_null()) {
        const auto& w = j.at("weights");
        if (!w.is_array() || w.size() != static_cast<std::size_t>(n))
            throw validation_error("cloud JSON field 'weights' must list one weight per atom");
        m.weights.resize(n);
        for (Eigen::Index i = 0; i < n; ++i)
            m.weights[i] = w[static_cast<std::size_t>(i)].get<double>();
    } else {
        m.weights = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    }
    m.validate();
    return m;
}

std::string format_cloud_json(const DiscreteMeasure& measure) {
    nlohmann::json j;
    j["d"] = measure.dim();
    auto atoms = nlohmann::json::array();
    for (Eigen::Index i = 0; i < measure.size(); ++i) {
        auto row = nlohmann::json::array();
        for (int k = 0; k < measure.dim(); ++k) {
            row.push_back(measure.atoms(i, k).real());
            row.push_back(measure.atoms(i, k).imag());
        }
        atoms.push_back(std::move(row));
    }
    j["atoms"] = std::move(atoms);
    auto weights = nlohmann::json::array();
    for (Eigen::Index i = 0; i < measure.size(); ++i) weights.push_back(measure.weights[i]);
    j["weights"] = std::move(weights);
    return j.dump(2) + "\n";
}

namespace {

CloudFormat resolve_format(const std::filesystem::path& path, CloudFormat format) {
    if (format != CloudFormat::Auto) return format;
    return path.extension() == ".json" ? CloudFormat::Json : CloudFormat::Csv;
}

} // namespace

DiscreteMeasure load_cloud(const std::filesystem::path& path, CloudFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open cloud file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return resolve_format(path, format) == CloudFormat::Json ? parse_cloud_json(buf.str())
                                                             : parse_cloud_csv(buf.str());
}

void save_cloud(const DiscreteMeasure& measure, const std::filesystem::path& path,
                CloudFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write cloud file '" + path.string() + "'");
    out << (resolve_format(path, format) == CloudFormat::Json ? format_cloud_json(measure)
                                                              : format_cloud_csv(measure));
}

} // namespace cdk
