#include "dbr/report.hpp"

#include <sstream>

namespace dbr {

void Report::absorb(const Report& sub)
{
    for (auto& n : sub.notes)
        notes.push_back(sub.title.empty() ? n : sub.title + ": " + n);
    for (auto& f : sub.failures)
        failures.push_back(sub.title.empty() ? f : sub.title + ": " + f);
}

std::string Report::to_string() const
{
    std::ostringstream os;
    os << (passed() ? "[ ok ] " : "[FAIL] ") << title;
    for (auto& n : notes)
        os << "\n       " << n;
    for (auto& f : failures)
        os << "\n       ! " << f;
    return os.str();
}

} // namespace dbr
