#include "hypertoda/io.hpp"

#include "hypertoda/error.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hypertoda
{

namespace
{

Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void flatten(const Json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out)
{
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

} // namespace

Complex parse_complex(const Json &j)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw Error(ErrorCode::ParseError, "expected a number or [re, im], got " + j.dump());
}

HyperellipticCurve parse_curve(const Json &j)
{
    if (!j.is_object() || !j.contains("genus") || !j.contains("lambda")) {
        throw Error(ErrorCode::ParseError, "curve needs \"genus\" and \"lambda\"");
    }
    if (!j["genus"].is_number_integer()) {
        throw Error(ErrorCode::ParseError, "\"genus\" must be an integer");
    }
    if (!j["lambda"].is_array()) {
        throw Error(ErrorCode::ParseError, "\"lambda\" must be a list");
    }
    std::vector<Complex> lambda;
    for (const auto &e : j["lambda"]) {
        lambda.push_back(parse_complex(e));
    }
    return HyperellipticCurve(j["genus"].get<int>(), std::move(lambda));
}

HyperellipticCurve load_curve(const std::string &path)
{
    return parse_curve(read_json_file(path));
}

ConicPair parse_conic(const Json &j)
{
    if (!j.is_object() || !j.contains("A") || !j["A"].is_array()) {
        throw Error(ErrorCode::ParseError, "conic needs a list \"A\"");
    }
    std::vector<Complex> a;
    for (const auto &e : j["A"]) {
        if (e.is_array() && e.size() == 3) {
            for (const auto &x : e) {
                a.push_back(parse_complex(x));
            }
        } else {
            a.push_back(parse_complex(e));
        }
    }
    if (a.size() != 9) {
        throw Error(ErrorCode::ParseError, "\"A\" must have nine entries");
    }
    Eigen::Matrix3cd A;
    for (int k = 0; k < 9; ++k) {
        A(k / 3, k % 3) = a[k];
    }
    return make_conic_pair(A);
}

ConicPair load_conic(const std::string &path)
{
    return parse_conic(read_json_file(path));
}

Json to_json(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

Json to_json(const std::vector<Complex> &zs)
{
    Json j = Json::array();
    for (const auto z : zs) {
        j.push_back(to_json(z));
    }
    return j;
}

Json to_json(const Eigen::VectorXcd &v)
{
    return to_json(std::vector<Complex>(v.data(), v.data() + v.size()));
}

Json to_json(const Eigen::MatrixXcd &m)
{
    Json j = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        j.push_back(std::move(row));
    }
    return j;
}

Json to_json(const ComplexPolynomial &p)
{
    return to_json(p.coeffs());
}

Json to_json(const CurvePoint &p)
{
    if (p.at_infinity) {
        return "infinity";
    }
    return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

Json curve_to_json(const HyperellipticCurve &c)
{
    return Json{{"genus", c.genus()}, {"lambda", to_json(c.lambdas())}};
}

OutputFormat parse_format(const std::string &s)
{
    if (s == "json" || s == "json-like" || s == "structured") {
        return OutputFormat::Json;
    }
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown format " + s);
}

std::string render(const Json &doc, const std::optional<Table> &table, OutputFormat fmt)
{
    if (fmt == OutputFormat::Json) {
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << std::setprecision(17);
    if (table) {
        for (std::size_t i = 0; i < table->header.size(); ++i) {
            os << (i ? "," : "") << table->header[i];
        }
        os << "\n";
        for (const auto &row : table->rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << row[i];
            }
            os << "\n";
        }
        return os.str();
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    os << "path,value\n";
    for (const auto &[k, v] : rows) {
        os << k << "," << v << "\n";
    }
    return os.str();
}

void write_output(const std::string &text, const std::string &path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    }
    out << text;
}

} // namespace hypertoda
