#ifndef LCKV_ERROR_HPP
#define LCKV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lckv {

// Every failure raised by the library carries a machine-readable kind
// (e.g. "DenominatorVanishes", "ParseError") next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace lckv

#endif
