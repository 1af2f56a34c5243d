#ifndef HYPERTODA_ERROR_HPP
#define HYPERTODA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypertoda
{

enum class ErrorCode {
    BadArity,
    DegenerateCurve,
    RootFindFailure,
    BranchPointSingularity,
    QuadratureNonConvergence,
    LegendreCertificateFailure,
    CycleBasisFailure,
    TruncationInsufficient,
    CharacteristicsNotFound,
    NormalizationUnstable,
    ThetaDivisorPole,
    PathThroughBranchPoint,
    NotALatticeVector,
    IndeterminateLimit,
    ConfluentInput,
    DegreeMismatch,
    NotTorsion,
    MultiplesNotDistinct,
    DegenerateConicPair,
    InvalidArgument,
    ParseError
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), m_code(code)
    {
    }
    ErrorCode code() const noexcept
    {
        return m_code;
    }

private:
    ErrorCode m_code;
};

} // namespace hypertoda

#endif
