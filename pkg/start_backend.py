#!/usr/bin/env python3
"""
Simple script to start the Sofic Class Toolkit API server
"""

import os
import sys
import subprocess

def main():
    print("🚀 Starting Sofic Class Toolkit API...")
    print(f"   Environment: {os.environ.get('SOFIC_ENV', 'default')}")

    # Change to backend directory
    backend_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'backend')
    os.chdir(backend_dir)

    # Start the Flask application
    try:
        subprocess.run([sys.executable, 'app.py'], check=True)
    except KeyboardInterrupt:
        print("\n👋 API server stopped")
    except Exception as e:
        print(f"❌ Error starting API server: {e}")
        sys.exit(1)

if __name__ == '__main__':
    main()
