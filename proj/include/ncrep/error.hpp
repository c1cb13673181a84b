#ifndef NCREP_ERROR_HPP
#define NCREP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncrep
{

// Invalid structure or arguments detected by the algebra layer (bad quiver,
// mixed-quiver operands, wrong degree, unknown arrow, ...).
class AlgebraError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Syntax or resolution failure in the quiver file format or the expression
// grammar. Line and column are 1-based.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &msg, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          m_line(line), m_column(column), m_message(msg)
    {
    }

    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }
    const std::string &message() const { return m_message; }

private:
    std::size_t m_line;
    std::size_t m_column;
    std::string m_message;
};

} // namespace ncrep

#endif
