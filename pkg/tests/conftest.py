import pytest

import sp4mono as m


@pytest.fixture(scope="session")
def rows():
    return m.dataset()


@pytest.fixture(scope="session")
def rows_by_key(rows):
    return {(r.table_id, r.row_no): r for r in rows}


@pytest.fixture(scope="session")
def certs():
    return m.builtin_certificates()


@pytest.fixture(scope="session")
def certs_by_id(certs):
    return {c.example_id: c for c in certs}


@pytest.fixture(scope="session")
def triple_for(rows_by_key):
    cache = {}

    def get(table_id, row_no):
        key = (table_id, row_no)
        if key not in cache:
            row = rows_by_key[key]
            cache[key] = m.levelt_triple(row.f, row.g)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def form_for(triple_for):
    cache = {}

    def get(table_id, row_no):
        key = (table_id, row_no)
        if key not in cache:
            cache[key] = m.invariant_form(triple_for(table_id, row_no))
        return cache[key]

    return get
