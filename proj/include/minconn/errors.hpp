#pragma once

#include <stdexcept>
#include <string>

namespace minconn {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MINCONN_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        using Error::Error;                                                   \
    }

// Construction / validation
MINCONN_DEFINE_ERROR(InvalidParameters);
MINCONN_DEFINE_ERROR(NonUniformEdge);
MINCONN_DEFINE_ERROR(DuplicateVertexInEdge);
MINCONN_DEFINE_ERROR(EmptyVertexSet);
MINCONN_DEFINE_ERROR(EdgeNotPresent);
MINCONN_DEFINE_ERROR(UnknownVertex);

// Parsing
MINCONN_DEFINE_ERROR(MalformedInput);

// Operational
MINCONN_DEFINE_ERROR(ResourceLimit);
MINCONN_DEFINE_ERROR(Disconnected);
MINCONN_DEFINE_ERROR(NotMinimallyConnected);
MINCONN_DEFINE_ERROR(NotComplete);

// Alarm errors: raised when a guaranteed structural property fails to hold.
// Seeing one of these on valid input means a checked claim has been falsified.
MINCONN_DEFINE_ERROR(InternalInconsistency);
MINCONN_DEFINE_ERROR(NoWitness);
MINCONN_DEFINE_ERROR(NoSpanningColor);

#undef MINCONN_DEFINE_ERROR

} // namespace minconn
