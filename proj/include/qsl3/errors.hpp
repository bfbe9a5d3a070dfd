#pragma once

#include <stdexcept>
#include <string>

namespace qsl3 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define QSL3_ERROR(Name)                                                   \
    struct Name : Error {                                                  \
        explicit Name(const std::string& w) : Error(#Name, w) {}           \
    }

QSL3_ERROR(DivisionByZero);
QSL3_ERROR(FieldMismatch);
QSL3_ERROR(ParseError);
QSL3_ERROR(InternalInconsistency);
QSL3_ERROR(VerificationFailure);
QSL3_ERROR(UnsupportedCase);
QSL3_ERROR(InvalidCosetWeight);
QSL3_ERROR(NotLocal);
QSL3_ERROR(TwistedModule);

#undef QSL3_ERROR

} // namespace qsl3
