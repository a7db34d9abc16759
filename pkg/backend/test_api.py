"""
Smoke test for a running Sofic Class Toolkit API
Start the server first (python start_backend.py), then run this script
"""

import os
import sys

import requests

# Configuration
BASE_URL = os.environ.get('SOFIC_API_URL', 'http://localhost:5000')
API_BASE = f"{BASE_URL}/api"
TIMEOUT = 30


def _post(path, payload):
    return requests.post(f"{API_BASE}{path}", json=payload, timeout=TIMEOUT)


def test_health_check():
    """Test the health check endpoint"""
    print("Testing health check...")
    try:
        response = requests.get(f"{API_BASE}/health", timeout=TIMEOUT)
        if response.status_code == 200:
            data = response.json()
            print(f"✅ Health check passed: {data['status']}")
            print(f"   Predicates: {', '.join(data['predicates'])}")
            return True
        print(f"❌ Health check failed: {response.status_code}")
        return False
    except Exception as e:
        print(f"❌ Health check error: {e}")
        return False


def test_stats():
    """Test cycle statistics of a small permutation"""
    print("\nTesting permutation stats...")
    try:
        response = _post('/stats', {'permutation': [2, 1, 3]})
        if response.status_code == 200:
            data = response.json()
            print(f"✅ Stats computed: m={data['m']}, hamming_to_id={data['hamming_to_id']}")
            return data['cyc'] == {'1': 1, '2': 2}
        print(f"❌ Stats failed: {response.status_code}")
        print(f"   Response: {response.text}")
        return False
    except Exception as e:
        print(f"❌ Stats error: {e}")
        return False


def test_factorize():
    """Test a feasible and an infeasible factorization"""
    print("\nTesting factorization...")
    try:
        response = _post('/factorize', {'permutation': [2, 3, 4, 5, 1], 'l1': 3, 'l2': 3})
        if response.status_code != 200 or not response.json().get('verified'):
            print(f"❌ Factorization failed: {response.status_code}")
            print(f"   Response: {response.text}")
            return False
        data = response.json()
        print(f"✅ Certificate: {data['c1']} * {data['c2']}")

        response = _post('/factorize', {'permutation': [2, 3, 4, 5, 1], 'l1': 3, 'l2': 2})
        if response.status_code == 422 and response.json().get('reason') == 'parity':
            print("✅ Infeasible instance rejected: parity")
            return True
        print(f"❌ Expected an infeasible answer, got {response.status_code}")
        return False
    except Exception as e:
        print(f"❌ Factorization error: {e}")
        return False


def test_check_predicate():
    """Test the class-power predicate"""
    print("\nTesting predicate check...")
    try:
        response = _post('/check/in-class-power', {'cp': '3/10', 'cq': '1/2', 'm': 2})
        if response.status_code == 200:
            data = response.json()
            print(f"✅ Verdict: {data['verdict']} ({'; '.join(data['inequalities'])})")
            return data['verdict'] is True
        print(f"❌ Predicate check failed: {response.status_code}")
        return False
    except Exception as e:
        print(f"❌ Predicate check error: {e}")
        return False


def test_power_witness():
    """Test power-class witness construction"""
    print("\nTesting power witness...")
    try:
        response = _post('/witness/power', {'n': 1000, 'cp': '3/10', 'cq': '1/2', 'm': 2, 'include_parts': False})
        if response.status_code == 200:
            data = response.json()
            print(f"✅ Witness built: case={data['parameters']['case']}, achieved={data['achieved']}")
            return True
        print(f"❌ Power witness failed: {response.status_code}")
        print(f"   Response: {response.text}")
        return False
    except Exception as e:
        print(f"❌ Power witness error: {e}")
        return False


def test_verify():
    """Test a quick acceptance suite run"""
    print("\nTesting verify...")
    try:
        response = _post('/verify', {'suites': ['hkl'], 'max_n': 5, 'seed': 1})
        if response.status_code == 200:
            data = response.json()
            for suite in data['suites']:
                print(f"   {suite['suite']}: {suite['checks']} checks, {suite['failure_count']} failures")
            if data['passed']:
                print("✅ Suites passed")
            return data['passed']
        print(f"❌ Verify failed: {response.status_code}")
        return False
    except Exception as e:
        print(f"❌ Verify error: {e}")
        return False


def main():
    """Run all tests"""
    print("🚀 Starting Sofic Class Toolkit API Tests")
    print(f"   Target: {API_BASE}")
    print("=" * 50)

    results = [
        test_health_check(),
        test_stats(),
        test_factorize(),
        test_check_predicate(),
        test_power_witness(),
        test_verify(),
    ]

    print("\n" + "=" * 50)
    print("📊 Test Summary")
    print("=" * 50)

    passed = sum(1 for r in results if r)
    failed = len(results) - passed
    print(f"✅ Passed: {passed}")
    print(f"❌ Failed: {failed}")

    if failed == 0:
        print("\n🎉 All tests passed! The API is working correctly.")
    else:
        print(f"\n⚠️  {failed} test(s) failed. Check the server logs for details.")

    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
