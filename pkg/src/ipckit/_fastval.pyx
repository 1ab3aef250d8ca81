# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled valuation scanner; behaviour matches ipckit._pureval exactly."""

from libc.stdlib cimport free, malloc

DEF OP_VAR = 0
DEF OP_BOT = 1
DEF OP_AND = 2
DEF OP_OR = 3
DEF OP_IMP = 4
DEF OP_BOX = 5


cdef inline unsigned long long _eval(
    int n, unsigned long long* up, int nops, int* ops, int* args,
    unsigned long long* vals, unsigned long long* stack,
):
    cdef int sp = 0
    cdef int k, x, op
    cdef unsigned long long a, b, miss, res
    for k in range(nops):
        op = ops[k]
        if op == OP_VAR:
            stack[sp] = vals[args[k]]
            sp += 1
        elif op == OP_BOT:
            stack[sp] = 0
            sp += 1
        elif op == OP_AND:
            sp -= 1
            stack[sp - 1] = stack[sp - 1] & stack[sp]
        elif op == OP_OR:
            sp -= 1
            stack[sp - 1] = stack[sp - 1] | stack[sp]
        elif op == OP_IMP:
            sp -= 1
            b = stack[sp]
            a = stack[sp - 1]
            miss = a & ~b
            res = 0
            for x in range(n):
                if up[x] & miss == 0:
                    res |= (<unsigned long long>1) << x
            stack[sp - 1] = res
        else:
            a = stack[sp - 1]
            miss = ~a
            res = 0
            for x in range(n):
                if up[x] & miss == 0:
                    res |= (<unsigned long long>1) << x
            stack[sp - 1] = res
    return stack[sp - 1]


def scan_validity(int n, up_list, unsigned long long full,
                  ops_list, args_list, int nvars, domain_list, limit):
    cdef int nops = len(ops_list)
    cdef int m = len(domain_list)
    cdef long long lim = -1 if limit is None else <long long>limit
    cdef long long work = 0
    cdef int i, v
    cdef unsigned long long* up = NULL
    cdef unsigned long long* domain = NULL
    cdef unsigned long long* vals = NULL
    cdef unsigned long long* stack = NULL
    cdef int* ops = NULL
    cdef int* args = NULL
    cdef int* idx = NULL
    cdef bint refuted = False

    if nvars == 0:
        if lim >= 0 and 1 > lim:
            return ("budget", None, 0)
    elif m == 0:
        return ("valid", None, 0)

    try:
        up = <unsigned long long*>malloc(max(n, 1) * sizeof(unsigned long long))
        domain = <unsigned long long*>malloc(max(m, 1) * sizeof(unsigned long long))
        vals = <unsigned long long*>malloc(max(nvars, 1) * sizeof(unsigned long long))
        stack = <unsigned long long*>malloc(max(nops, 1) * sizeof(unsigned long long))
        ops = <int*>malloc(max(nops, 1) * sizeof(int))
        args = <int*>malloc(max(nops, 1) * sizeof(int))
        idx = <int*>malloc(max(nvars, 1) * sizeof(int))
        for i in range(n):
            up[i] = up_list[i]
        for i in range(m):
            domain[i] = domain_list[i]
        for i in range(nops):
            ops[i] = ops_list[i]
            args[i] = args_list[i]

        if nvars == 0:
            refuted = _eval(n, up, nops, ops, args, vals, stack) != full
            return ("refuted" if refuted else "valid",
                    () if refuted else None, 1)

        for i in range(nvars):
            idx[i] = 0
            vals[i] = domain[0]
        while True:
            work += 1
            if lim >= 0 and work > lim:
                return ("budget", None, work - 1)
            if _eval(n, up, nops, ops, args, vals, stack) != full:
                return ("refuted", tuple([idx[i] for i in range(nvars)]), work)
            v = nvars - 1
            while v >= 0:
                idx[v] += 1
                if idx[v] < m:
                    vals[v] = domain[idx[v]]
                    break
                idx[v] = 0
                vals[v] = domain[0]
                v -= 1
            if v < 0:
                return ("valid", None, work)
    finally:
        free(up)
        free(domain)
        free(vals)
        free(stack)
        free(ops)
        free(args)
        free(idx)
