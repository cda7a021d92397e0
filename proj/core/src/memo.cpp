#include "symfun/memo.hpp"

namespace symfun {

namespace {
thread_local MemoTables* tl_override = nullptr;
}

MemoTables& global_memo() {
    static MemoTables tables;
    return tables;
}

MemoTables& memo() {
    return tl_override ? *tl_override : global_memo();
}

ScopedMemo::ScopedMemo() : active_(&owned_), prev_(tl_override) {
    tl_override = active_;
}

ScopedMemo::ScopedMemo(MemoTables& tables) : active_(&tables), prev_(tl_override) {
    tl_override = active_;
}

ScopedMemo::~ScopedMemo() {
    tl_override = prev_;
}

} // namespace symfun
