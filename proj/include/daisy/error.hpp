#ifndef DAISY_ERROR_HPP
#define DAISY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace daisy {

enum class Errc {
    invalid_argument,
    size_limit,
    parse,
    disconnected,
    not_daisy,
    not_isometric,
    overflow,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace daisy

#endif
