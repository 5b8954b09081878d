"""
Console entry point: `jsbo kernel-expand --domain sym:2` runs the
`kernel_expand` management command under the workbench settings.

Exit status 0 on success, 1 when a verification fails, 2 on usage errors and
on any signalled computation error, whose payload goes to stderr as JSON.
"""
import os
import sys

COMMANDS = ('domains', 'kernel_expand', 'schur', 'kernel', 'operator', 'verify', 'residue')


def usage():
    names = ', '.join(name.replace('_', '-') for name in COMMANDS)
    return f'usage: jsbo <command> [options]\ncommands: {names}\n'


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'jsbo_workbench.settings')

    import django
    django.setup()

    from django.core.management import load_command_class
    from django.core.management.base import CommandError

    from .exceptions import JsboError, error_payload
    from .serializers import render_json

    if not argv or argv[0] in ('-h', '--help'):
        sys.stdout.write(usage())
        return 0 if argv else 2
    name = argv[0].replace('-', '_')
    if name not in COMMANDS:
        sys.stderr.write(render_json({'error': f'Unknown command {argv[0]!r}.', 'code': 'usage'}) + '\n')
        sys.stderr.write(usage())
        return 2

    command = load_command_class('jsbo', name)
    command._called_from_command_line = True
    parser = command.create_parser('jsbo', argv[0])
    try:
        options = parser.parse_args(argv[1:])
    except SystemExit as exc:
        return exc.code
    cmd_options = vars(options)
    args = cmd_options.pop('args', ())
    try:
        command.execute(*args, **cmd_options)
    except JsboError as exc:
        sys.stderr.write(render_json(error_payload(exc)) + '\n')
        return 2
    except CommandError as exc:
        sys.stderr.write(render_json({'error': str(exc), 'code': 'usage' if exc.returncode == 2 else 'failed'}) + '\n')
        return exc.returncode
    return 0


if __name__ == '__main__':
    sys.exit(main())
