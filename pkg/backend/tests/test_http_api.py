import pytest

from app import app

FIVE_CYCLE = '2 3 4 5 1'


@pytest.fixture
def client():
    app.config['TESTING'] = True
    with app.test_client() as client:
        yield client


def test_health(client):
    response = client.get('/api/health')
    assert response.status_code == 200
    data = response.get_json()
    assert data['status'] == 'healthy'
    assert 'in-class-power' in data['predicates']


def test_stats(client):
    response = client.post('/api/stats', json={'permutation': '2 1 3'})
    assert response.status_code == 200
    data = response.get_json()
    assert data['m'] == 2
    assert data['hamming_to_id'] == '2/3'


def test_stats_accepts_image_lists_and_cycles(client):
    assert client.post('/api/stats', json={'permutation': [2, 1, 3]}).get_json()['n_cycles'] == 1
    data = client.post('/api/stats', json={'permutation': '(1 2 3)', 'degree': 5, 'inf_threshold': 10}).get_json()
    assert data['profile'] == {'masses': {'1': '2/5', '3': '3/5'}, 'inf': '0/1'}


def test_stats_malformed(client):
    response = client.post('/api/stats', json={'permutation': '2 2 1'})
    assert response.status_code == 400
    data = response.get_json()
    assert data['kind'] == 'malformed_input'
    assert data['position'] == 3


def test_missing_field_and_bad_body(client):
    response = client.post('/api/stats', json={})
    assert response.status_code == 400
    assert 'permutation' in response.get_json()['error']
    assert client.post('/api/stats', data='not json').status_code == 400


def test_sequence_stats(client):
    response = client.post('/api/sequence-stats', json={'permutations': ['2 1 3 4', [2, 1, 4, 3, 5, 6, 7, 8, 9]]})
    assert response.status_code == 200
    data = response.get_json()
    assert [level['n_k'] for level in data['levels']] == [4, 9]
    assert data['trajectories'][1]['cyc_2'] == '4/9'


def test_factorize(client):
    response = client.post('/api/factorize', json={'permutation': FIVE_CYCLE, 'l1': 3, 'l2': 3})
    assert response.status_code == 200
    assert response.get_json()['verified'] is True


def test_factorize_infeasible(client):
    response = client.post('/api/factorize', json={'permutation': FIVE_CYCLE, 'l1': 3, 'l2': 2})
    assert response.status_code == 422
    data = response.get_json()
    assert data['kind'] == 'infeasible'
    assert data['reason'] == 'parity'


def test_factorize_length_out_of_range(client):
    response = client.post('/api/factorize', json={'permutation': FIVE_CYCLE, 'l1': 3, 'l2': 1})
    assert response.status_code == 400
    assert response.get_json()['kind'] == 'length_out_of_range'


def test_factorize_base(client):
    response = client.post('/api/factorize', json={'permutation': '(1 2)(3 4)', 'degree': 4, 'base': True})
    data = response.get_json()
    assert (data['c1'], data['c2']) == ('(1 4 3 2)', '(1 3)')


def test_check(client):
    response = client.post('/api/check/in-class-power', json={'cp': '3/10', 'cq': '1/2', 'm': 2})
    assert response.status_code == 200
    data = response.get_json()
    assert data['verdict'] is True
    assert data['inequalities'] == ['1/2 ≤ 3/5']


def test_check_density(client):
    response = client.post('/api/check/density', json={'c': '2/5', 'm': 5})
    assert response.status_code == 200
    assert response.get_json()['verdict'] == 2
    assert 'density' in client.get('/api/health').get_json()['predicates']


def test_check_profiles_as_objects(client):
    profile = {'masses': {'1': '1/2'}, 'inf': '1/2'}
    response = client.post('/api/check/conjugate', json={'profile': profile, 'other': '1:1/2 inf:1/2'})
    assert response.get_json()['verdict'] is True


def test_check_errors(client):
    assert client.post('/api/check/unknown', json={}).status_code == 400
    response = client.post('/api/check/in-class-power', json={'cp': '3/10', 'cq': '1/2'})
    assert response.status_code == 400
    assert response.get_json()['error'] == 'Missing required field: m'
    response = client.post('/api/check/in-class-power', json={'cp': '3/10', 'cq': '1/2', 'm': 1})
    assert response.status_code == 422
    assert response.get_json()['kind'] == 'domain_error'


def test_power_witness(client):
    response = client.post('/api/witness/power',
                           json={'n': 1000, 'cp': '1/2', 'cq': '1/2', 'm': 2, 'include_parts': False})
    assert response.status_code == 200
    data = response.get_json()
    assert 'parts' not in data
    assert data['parameters']['case'] == 'shrinking'
    assert data['product_cycle_count'] == 1


def test_power_witness_infeasible_target(client):
    response = client.post('/api/witness/power', json={'n': 1000, 'cp': '1/10', 'cq': '1/2', 'm': 2})
    assert response.status_code == 422
    assert response.get_json()['kind'] == 'infeasible_target'


def test_two_class_witness(client):
    images = list(range(2, 601)) + [1] + list(range(601, 1001))
    response = client.post('/api/witness/two-class', json={'permutation': images, 'c1': '2/5', 'c2': '3/10'})
    assert response.status_code == 200
    data = response.get_json()
    assert (data['l1'], data['l2']) == (401, 302)


def test_approximate_conjugator(client):
    response = client.post('/api/witness/approximate-conjugator', json={'p': '2 1 3 4', 'q': '1 2 4 3'})
    assert response.get_json()['defect'] == '0/1'
    response = client.post('/api/witness/approximate-conjugator', json={'p': '2 1 3', 'q': '1 2 4 3'})
    assert response.status_code == 422
    assert response.get_json()['kind'] == 'degree_mismatch'


def test_verify(client):
    response = client.post('/api/verify', json={'suites': ['profiles']})
    assert response.status_code == 200
    data = response.get_json()
    assert data['passed'] is True
    assert data['suites'][0]['suite'] == 'profiles'


def test_unknown_route(client):
    response = client.get('/api/nothing')
    assert response.status_code == 404
    assert response.get_json()['kind'] == 'http'
