#ifndef CI2_ERRORS_HPP
#define CI2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ci2 {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// F(lambda,mu)=0 or R_{i-1}(lambda_i,mu_i)=0 while R_{i-1}!=0.
// `step` is the index the caller may re-anchor at.
struct AnchorError : Error {
    int step;
    explicit AnchorError(int s, const std::string& msg) : Error(msg), step(s) {}
};

struct FrameError : Error {
    explicit FrameError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& msg) : Error(msg), pos(p) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct NotBoundaryPoint : Error {
    explicit NotBoundaryPoint(const std::string& msg) : Error(msg) {}
};

} // namespace ci2

#endif
