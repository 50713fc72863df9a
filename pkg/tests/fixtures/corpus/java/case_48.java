import java . util . * ;
import java . lang . * ;

class CASE_48 {

    static int f_gold ( int x ) {
        int rev = 0 ;
        while ( x != 0 ) {
            rev = rev * 2 + x % 2 ;
            x = x / 2 ;
        }
        return rev ;
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( 1234 ) ) ;
    }
}
