#ifndef HYPERTODA_IO_HPP
#define HYPERTODA_IO_HPP

#include "hypertoda/poncelet.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hypertoda
{

using Json = nlohmann::ordered_json;

// {"genus": g, "lambda": [[re, im], ...]} with 2g+1 entries in ascending degree.
// A bare number is accepted for a real entry.
HyperellipticCurve parse_curve(const Json &j);
HyperellipticCurve load_curve(const std::string &path);

// {"A": [[a1, a2, a3], [a4, a5, a6], [a7, a8, a9]]} or a flat list of nine entries.
ConicPair parse_conic(const Json &j);
ConicPair load_conic(const std::string &path);

Complex parse_complex(const Json &j);
Json to_json(Complex z);
Json to_json(const std::vector<Complex> &zs);
Json to_json(const Eigen::VectorXcd &v);
Json to_json(const Eigen::MatrixXcd &m);
Json to_json(const ComplexPolynomial &p);
Json to_json(const CurvePoint &p);
Json curve_to_json(const HyperellipticCurve &c);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

enum class OutputFormat { Json, Csv };
OutputFormat parse_format(const std::string &s);

// Csv writes the table when present, otherwise path,value rows of the flattened document.
std::string render(const Json &doc, const std::optional<Table> &table, OutputFormat fmt);
// Writes to path, or stdout when path is empty.
void write_output(const std::string &text, const std::string &path);

} // namespace hypertoda

#endif
